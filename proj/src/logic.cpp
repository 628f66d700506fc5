#include "cqe/logic.hpp"

#include "cqe/constructions.hpp"

namespace cqe {

using namespace logic;

namespace {

Term va() { return Term::var("a", bool_ty()); }
Term vb() { return Term::var("b", bool_ty()); }

Theorem need(const std::optional<Theorem>& th, const Kernel& k, const Term& t) {
  return th ? *th : k.REFL(t);
}

// |- c a1 ... an = body[a1..an], unfolding a definition and beta-reducing.
Theorem unfold(const Logic& lg, const std::string& name, const std::vector<Term>& args,
               const Type& at) {
  const Kernel& k = lg.kernel();
  auto def = k.definition(name);
  if (!def) fail(ErrorKind::UnknownConstant, "no definition for " + name);
  Theorem th = *def;
  TypeSubst theta;
  if (!match_type(eq_lhs(th.conclusion()).type(), at, theta))
    fail(ErrorKind::TypeMismatch, "definition of " + name + " used at the wrong type");
  th = k.INST_TYPE(theta, th);
  for (const auto& a : args) th = lg.AP_THM(th, a);
  return k.TRANS(th, lg.BETA_NORM_CONV(eq_rhs(th.conclusion())));
}

std::pair<Term, Term> need_binop(const char* op, const Term& t, const char* rule) {
  auto p = dest_binop(op, t);
  if (!p) fail(ErrorKind::WrongShape, std::string(rule) + ": unexpected conclusion shape");
  return *p;
}

}  // namespace

Logic::Logic(Kernel& k)
    : k_(k),
      truth_(k.REFL(truth())),
      and_elim1_(truth_),
      and_elim2_(truth_),
      conj_(truth_),
      imp_(truth_),
      not_(truth_),
      forall_(truth_) {
  Term p = Term::var("p", bool_ty());
  Term id = Term::abs(p, p);
  truth_ = k.EQ_MP(SYM(*k.definition(kTrue)), k.REFL(id));

  Term a = va(), b = vb();
  Type bbb = fun_ty(bool_ty(), fun_ty(bool_ty(), bool_ty()));
  Theorem and_exp = unfold(*this, kAnd, {a, b}, bbb);
  Term x = Term::var("x", bool_ty()), y = Term::var("y", bool_ty());
  auto select = [&](const Term& pick) {
    Theorem th = k.EQ_MP(and_exp, k.ASSUME(mk_conj(a, b)));
    Term sel = Term::abs(x, Term::abs(y, pick));
    Theorem ap = AP_THM(th, sel);
    Theorem l = BETA_NORM_CONV(eq_lhs(ap.conclusion()));
    Theorem r = BETA_NORM_CONV(eq_rhs(ap.conclusion()));
    return EQT_ELIM(k.TRANS(k.TRANS(SYM(l), ap), r));
  };
  and_elim1_ = select(x);
  and_elim2_ = select(y);

  Term f = Term::var("f", bbb);
  Theorem fab = k.MK_COMB(k.MK_COMB(k.REFL(f), EQT_INTRO(k.ASSUME(a))), EQT_INTRO(k.ASSUME(b)));
  conj_ = k.EQ_MP(SYM(and_exp), k.ABS(f, fab));

  imp_ = unfold(*this, kImp, {a, b}, bbb);
  not_ = unfold(*this, kNot, {a}, fun_ty(bool_ty(), bool_ty()));
  Type alpha = Type::var("A");
  Term pv = Term::var("P", fun_ty(alpha, bool_ty()));
  forall_ = unfold(*this, kForall, {pv}, fun_ty(fun_ty(alpha, bool_ty()), bool_ty()));
}

// --- equality ----------------------------------------------------------------

Theorem Logic::SYM(const Theorem& th) const {
  if (!is_eq(th.conclusion())) fail(ErrorKind::WrongShape, "SYM: not an equation");
  const Term& l = eq_lhs(th.conclusion());
  Term eq = Term::constant("=", fun_ty(l.type(), fun_ty(l.type(), bool_ty())));
  Theorem lr = k_.MK_COMB(k_.MK_COMB(k_.REFL(eq), th), k_.REFL(l));
  return k_.EQ_MP(lr, k_.REFL(l));
}

Theorem Logic::AP_TERM(const Term& f, const Theorem& th) const {
  return k_.MK_COMB(k_.REFL(f), th);
}

Theorem Logic::AP_THM(const Theorem& th, const Term& x) const {
  return k_.MK_COMB(th, k_.REFL(x));
}

// --- connectives -------------------------------------------------------------

Theorem Logic::EQT_INTRO(const Theorem& th) const { return k_.DEDUCT_ANTISYM(th, truth_); }

Theorem Logic::EQT_ELIM(const Theorem& th) const {
  if (!is_eq(th.conclusion()) || eq_rhs(th.conclusion()) != truth())
    fail(ErrorKind::WrongShape, "EQT_ELIM: expected p = T");
  return k_.EQ_MP(SYM(th), truth_);
}

Theorem Logic::INSTANTIATE(const Theorem& th, const TypeSubst& tys, const Bindings& vs) const {
  return k_.INST(vs, k_.INST_TYPE(tys, th));
}

Theorem Logic::CONJ(const Theorem& a, const Theorem& b) const {
  Theorem l = k_.INST({{va(), a.conclusion()}, {vb(), b.conclusion()}}, conj_);
  return PROVE_HYP(a, PROVE_HYP(b, l));
}

Theorem Logic::CONJUNCT1(const Theorem& th) const {
  auto [a, b] = need_binop(kAnd, th.conclusion(), "CONJUNCT1");
  return PROVE_HYP(th, k_.INST({{va(), a}, {vb(), b}}, and_elim1_));
}

Theorem Logic::CONJUNCT2(const Theorem& th) const {
  auto [a, b] = need_binop(kAnd, th.conclusion(), "CONJUNCT2");
  return PROVE_HYP(th, k_.INST({{va(), a}, {vb(), b}}, and_elim2_));
}

Theorem Logic::MP(const Theorem& imp, const Theorem& th) const {
  auto [a, b] = need_binop(kImp, imp.conclusion(), "MP");
  Theorem e = k_.EQ_MP(k_.INST({{va(), a}, {vb(), b}}, imp_), imp);
  return CONJUNCT2(k_.EQ_MP(SYM(e), th));
}

Theorem Logic::DISCH(const Term& p, const Theorem& th) const {
  const Term& q = th.conclusion();
  Theorem pq = CONJ(k_.ASSUME(p), th);
  Theorem back = CONJUNCT1(k_.ASSUME(mk_conj(p, q)));
  Theorem d = k_.DEDUCT_ANTISYM(pq, back);
  return k_.EQ_MP(SYM(k_.INST({{va(), p}, {vb(), q}}, imp_)), d);
}

Theorem Logic::UNDISCH(const Theorem& th) const {
  auto [a, b] = need_binop(kImp, th.conclusion(), "UNDISCH");
  return MP(th, k_.ASSUME(a));
}

Theorem Logic::GEN(const Term& x, const Theorem& th) const {
  if (!x.is_var()) fail(ErrorKind::NotAVariable, "GEN: expected a variable");
  Term lam = Term::abs(x, th.conclusion());
  TypeSubst tys{{"A", x.type()}};
  Theorem lemma = INSTANTIATE(forall_, tys, {{Term::var("P", lam.type()), lam}});
  return k_.EQ_MP(SYM(lemma), k_.ABS(x, EQT_INTRO(th)));
}

Theorem Logic::SPEC(const Term& t, const Theorem& th) const {
  auto all = dest_binder(kForall, th.conclusion());
  if (!all) fail(ErrorKind::WrongShape, "SPEC: not a universal statement");
  const Term& lam = th.conclusion().arg();
  if (t.type() != all->first.type()) fail(ErrorKind::TypeMismatch, "SPEC: argument type");
  TypeSubst tys{{"A", t.type()}};
  Theorem lemma = INSTANTIATE(forall_, tys, {{Term::var("P", lam.type()), lam}});
  Theorem e = k_.EQ_MP(lemma, th);
  Theorem ap = AP_THM(e, t);
  Theorem l = k_.BETA(eq_lhs(ap.conclusion()));
  Theorem r = k_.BETA(eq_rhs(ap.conclusion()));
  return EQT_ELIM(k_.TRANS(k_.TRANS(SYM(l), ap), r));
}

Theorem Logic::PROVE_HYP(const Theorem& a, const Theorem& b) const {
  bool used = false;
  for (const auto& h : b.hypotheses())
    if (alpha_equivalent(h, a.conclusion())) used = true;
  if (!used) return b;
  return k_.EQ_MP(k_.DEDUCT_ANTISYM(a, b), a);
}

Theorem Logic::ADD_ASSUM(const Term& p, const Theorem& th) const {
  return MP(DISCH(p, th), k_.ASSUME(p));
}

Theorem Logic::NOT_INTRO(const Theorem& th) const {
  auto [p, f] = need_binop(kImp, th.conclusion(), "NOT_INTRO");
  if (f != falsity()) fail(ErrorKind::WrongShape, "NOT_INTRO: expected p ==> F");
  return k_.EQ_MP(SYM(k_.INST({{va(), p}}, not_)), th);
}

Theorem Logic::NOT_ELIM(const Theorem& th) const {
  auto p = dest_neg(th.conclusion());
  if (!p) fail(ErrorKind::WrongShape, "NOT_ELIM: expected ~p");
  return k_.EQ_MP(k_.INST({{va(), *p}}, not_), th);
}

Theorem Logic::CONTR(const Term& p, const Theorem& th) const {
  if (th.conclusion() != falsity()) fail(ErrorKind::WrongShape, "CONTR: expected |- F");
  return SPEC(p, k_.EQ_MP(*k_.definition(kFalse), th));
}

// |- (p \/ q) = !r. (p ==> r) ==> (q ==> r) ==> r
static Theorem or_unfold(const Logic& lg, const Term& p, const Term& q) {
  return unfold(lg, kOr, {p, q}, fun_ty(bool_ty(), fun_ty(bool_ty(), bool_ty())));
}

static Theorem disj_intro(const Logic& lg, const Term& p, const Term& q, const Theorem& th,
                          bool left) {
  Theorem e = or_unfold(lg, p, q);
  Term r = dest_binder(kForall, eq_rhs(e.conclusion()))->first;
  Term pr = mk_imp(p, r), qr = mk_imp(q, r);
  const Kernel& k = lg.kernel();
  Theorem body = lg.DISCH(pr, lg.DISCH(qr, lg.MP(k.ASSUME(left ? pr : qr), th)));
  return k.EQ_MP(lg.SYM(e), lg.GEN(r, body));
}

Theorem Logic::DISJ1(const Theorem& th, const Term& q) const {
  return disj_intro(*this, th.conclusion(), q, th, true);
}

Theorem Logic::DISJ2(const Term& p, const Theorem& th) const {
  return disj_intro(*this, p, th.conclusion(), th, false);
}

Theorem Logic::DISJ_CASES(const Theorem& pq, const Theorem& pr, const Theorem& qr) const {
  auto [p, q] = need_binop(kOr, pq.conclusion(), "DISJ_CASES");
  const Term& r = pr.conclusion();
  if (!alpha_equivalent(r, qr.conclusion()))
    fail(ErrorKind::WrongShape, "DISJ_CASES: the cases prove different conclusions");
  Theorem inst = SPEC(r, k_.EQ_MP(or_unfold(*this, p, q), pq));
  return MP(MP(inst, DISCH(p, pr)), DISCH(q, qr));
}

Theorem Logic::EQF_INTRO(const Theorem& th) const {
  auto p = dest_neg(th.conclusion());
  if (!p) fail(ErrorKind::WrongShape, "EQF_INTRO: expected ~p");
  Theorem to_f = UNDISCH(NOT_ELIM(th));
  Theorem from_f = CONTR(*p, k_.ASSUME(falsity()));
  return k_.DEDUCT_ANTISYM(from_f, to_f);
}

Theorem Logic::EQF_ELIM(const Theorem& th) const {
  if (!is_eq(th.conclusion()) || eq_rhs(th.conclusion()) != falsity())
    fail(ErrorKind::WrongShape, "EQF_ELIM: expected p = F");
  const Term& p = eq_lhs(th.conclusion());
  return NOT_INTRO(DISCH(p, k_.EQ_MP(th, k_.ASSUME(p))));
}

// --- conversions -------------------------------------------------------------

Theorem Logic::BETA_CONV(const Term& t) const { return k_.BETA(t); }

std::optional<Theorem> Logic::beta_norm(const Term& t) const {
  switch (t.kind()) {
    case Term::Kind::Comb: {
      auto a = beta_norm(t.op());
      auto b = beta_norm(t.arg());
      std::optional<Theorem> th;
      if (a || b) th = k_.MK_COMB(need(a, k_, t.op()), need(b, k_, t.arg()));
      Term cur = th ? eq_rhs(th->conclusion()) : t;
      if (!cur.is_comb() || !cur.op().is_abs()) return th;
      std::optional<Theorem> bt;
      try {
        bt = k_.BETA(cur);
      } catch (const SubstitutionBlocked&) {
        return th;
      }
      if (eq_rhs(bt->conclusion()) == cur) return th;
      auto rest = beta_norm(eq_rhs(bt->conclusion()));
      Theorem step = rest ? k_.TRANS(*bt, *rest) : *bt;
      return th ? k_.TRANS(*th, step) : step;
    }
    case Term::Kind::Abs: {
      auto b = beta_norm(t.body());
      if (!b) return std::nullopt;
      try {
        return k_.ABS(t.binder(), *b);
      } catch (const Error&) {
        return std::nullopt;
      }
    }
    case Term::Kind::Eval: {
      auto c = beta_norm(t.content());
      if (!c) return std::nullopt;
      return k_.EVAL_CONG(*c, t.annotation());
    }
    default: return std::nullopt;
  }
}

Theorem Logic::BETA_NORM_CONV(const Term& t) const { return need(beta_norm(t), k_, t); }

Theorem Logic::BETA_RULE(const Theorem& th) const {
  auto n = beta_norm(th.conclusion());
  return n ? k_.EQ_MP(*n, th) : th;
}

std::optional<Theorem> Logic::rewrite_once(const std::vector<std::pair<Term, Theorem>>& eqs,
                                           const Term& t) const {
  for (const auto& [l, th] : eqs)
    if (alpha_equivalent(l, t)) return th;
  switch (t.kind()) {
    case Term::Kind::Comb: {
      auto a = rewrite_once(eqs, t.op());
      auto b = rewrite_once(eqs, t.arg());
      if (!a && !b) return std::nullopt;
      return k_.MK_COMB(need(a, k_, t.op()), need(b, k_, t.arg()));
    }
    case Term::Kind::Abs: {
      auto b = rewrite_once(eqs, t.body());
      if (!b) return std::nullopt;
      return k_.ABS(t.binder(), *b);
    }
    case Term::Kind::Eval: {
      auto c = rewrite_once(eqs, t.content());
      if (!c) return std::nullopt;
      return k_.EVAL_CONG(*c, t.annotation());
    }
    default: return std::nullopt;
  }
}

Theorem Logic::REWRITE_CONV(const std::vector<Theorem>& eqs, const Term& t) const {
  std::vector<std::pair<Term, Theorem>> rules;
  for (const auto& th : eqs) {
    const Term& c = th.conclusion();
    if (is_eq(c)) rules.emplace_back(eq_lhs(c), th);
    else rules.emplace_back(c, EQT_INTRO(th));
  }
  Theorem acc = k_.REFL(t);
  for (int round = 0; round < 64; ++round) {
    auto step = rewrite_once(rules, eq_rhs(acc.conclusion()));
    if (!step) break;
    acc = k_.TRANS(acc, *step);
  }
  return acc;
}

Theorem Logic::REWRITE(const std::vector<Theorem>& eqs, const Theorem& th) const {
  return k_.EQ_MP(REWRITE_CONV(eqs, th.conclusion()), th);
}

Theorem Logic::PROVE_SYNTAX(const Term& p) const {
  Theorem n = BETA_NORM_CONV(p);
  struct Prover {
    const Logic& lg;
    Theorem go(const Term& q) const {
      const Kernel& k = lg.kernel();
      if (auto c = dest_binop(kAnd, q)) return lg.CONJ(go(c->first), go(c->second));
      if (auto all = dest_binder(kForall, q)) {
        auto inner = dest_neg(all->second);
        if (inner) {
          auto [h, args] = strip_comb(*inner);
          if (h.is_const() && h.name() == kIsFreeIn && args.size() == 2 && args[0] == all->first) {
            Theorem th = k.CLOSED_CONV(args[1]);
            if (alpha_equivalent(th.conclusion(), q)) return th;
            return k.EQ_MP(lg.REWRITE_CONV({}, th.conclusion()), th);
          }
        }
      }
      Term atom = q;
      if (auto inner = dest_neg(q)) atom = *inner;
      auto [h, args] = strip_comb(atom);
      if (!h.is_const() || args.size() != 2)
        fail(ErrorKind::WrongShape, "not a syntax side condition");
      Theorem th = h.name() == kIsExprType ? k.IS_EXPR_TYPE_CONV(args[0], args[1])
                   : h.name() == kIsFreeIn ? k.IS_FREE_IN_CONV(args[0], args[1])
                                           : (fail(ErrorKind::WrongShape, "not a syntax side condition"), k.REFL(q));
      if (!alpha_equivalent(th.conclusion(), q))
        fail(ErrorKind::WrongShape, "syntax side condition is false");
      return th;
    }
  };
  Theorem pr = Prover{*this}.go(eq_rhs(n.conclusion()));
  return k_.EQ_MP(SYM(n), pr);
}

Theorem Logic::MP_SYNTAX(const Theorem& th) const {
  auto [a, b] = need_binop(kImp, th.conclusion(), "MP_SYNTAX");
  return MP(th, PROVE_SYNTAX(a));
}

Theorem Logic::EVAL_REDEX_CONV(const Term& redex) const {
  if (!redex.is_comb() || !redex.op().is_abs() || !redex.op().body().is_eval())
    fail(ErrorKind::WrongShape, "EVAL_REDEX_CONV: expected (\\x. eval B to ty) A");
  const Term& x = redex.op().binder();
  const Term& e = redex.op().body();
  Theorem r = k_.BETA_REVAL(x, e.content(), redex.arg(), e.annotation());
  auto [ante, concl] = need_binop(kImp, r.conclusion(), "EVAL_REDEX_CONV");
  Theorem eq = MP(r, PROVE_SYNTAX(ante));
  Term inner = Term::comb(Term::abs(x, e.content()), redex.arg());
  return k_.TRANS(eq, k_.EVAL_CONG(BETA_NORM_CONV(inner), e.annotation()));
}

Theorem Logic::DISQUOTE_CONV(const Term& q, const Type& ty) const {
  if (!q.is_quote()) fail(ErrorKind::WrongShape, "DISQUOTE_CONV: not a quotation");
  if (q.contains_quasiquote()) fail(ErrorKind::HasHoles, "DISQUOTE_CONV: quotation has holes");
  const Term& b = q.body();
  if (b.type() != ty) fail(ErrorKind::TypeMismatch, "DISQUOTE_CONV: type does not match");
  if (b.is_var() || b.is_const()) return k_.DISQUO(q, ty);
  Theorem e1 = k_.EVAL_CONG(k_.LAW_OF_QUO_STEP(q), ty);
  if (b.is_comb()) {
    Term qf = Term::quote(b.op()), qa = Term::quote(b.arg());
    Type alpha = b.arg().type();
    Theorem split = k_.APP_SPLIT(qf, qa, alpha, ty);
    Theorem e2 = MP(split, PROVE_SYNTAX(need_binop(kImp, split.conclusion(), "APP_SPLIT").first));
    Theorem e3 = k_.MK_COMB(DISQUOTE_CONV(qf, b.op().type()), DISQUOTE_CONV(qa, alpha));
    return k_.TRANS(e1, k_.TRANS(e2, e3));
  }
  if (b.is_abs()) {
    Term qb = Term::quote(b.body());
    Theorem split = k_.ABS_SPLIT(b.binder(), qb, b.body().type());
    Theorem e2 = MP(split, PROVE_SYNTAX(need_binop(kImp, split.conclusion(), "ABS_SPLIT").first));
    Theorem e3 = k_.ABS(b.binder(), DISQUOTE_CONV(qb, b.body().type()));
    return k_.TRANS(e1, k_.TRANS(e2, e3));
  }
  // Nested quotation.
  Theorem quo = k_.QUOTABLE(b);
  Theorem e2 = MP(quo, PROVE_SYNTAX(need_binop(kImp, quo.conclusion(), "QUOTABLE").first));
  return k_.TRANS(e1, e2);
}

// --- theories ----------------------------------------------------------------

namespace {

struct CtorShape {
  Term ctor;
  std::vector<Type> args;
};

std::vector<CtorShape> shapes(const std::vector<Term>& ctors) {
  std::vector<CtorShape> out;
  for (const auto& c : ctors) {
    CtorShape s{c, {}};
    for (Type t = c.type(); t.is_fun(); t = t.codomain()) s.args.push_back(t.domain());
    out.push_back(s);
  }
  return out;
}

std::vector<Term> vars_for(const std::vector<Type>& tys, const std::string& suffix) {
  std::vector<Term> out;
  for (std::size_t i = 0; i < tys.size(); ++i) {
    std::string base = tys[i] == str_ty() ? "s" : tys[i] == type_ty() ? "t" : "e";
    out.push_back(Term::var(base + std::to_string(i) + suffix, tys[i]));
  }
  return out;
}

Term forall_all(const std::vector<Term>& vs, Term body) {
  for (std::size_t i = vs.size(); i-- > 0;) body = mk_forall(vs[i], body);
  return body;
}

void install_datatype(Kernel& k, const std::string& tyname, const Type& ty,
                      const std::vector<Term>& ctors) {
  auto cs = shapes(ctors);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    auto xs = vars_for(cs[i].args, "");
    auto ys = vars_for(cs[i].args, "'");
    if (!xs.empty()) {
      Term conj = mk_eq(xs.back(), ys.back());
      for (std::size_t j = xs.size() - 1; j-- > 0;) conj = mk_conj(mk_eq(xs[j], ys[j]), conj);
      std::vector<Term> all = xs;
      all.insert(all.end(), ys.begin(), ys.end());
      k.new_axiom(tyname + "_INJ_" + cs[i].ctor.name(),
                  forall_all(all, mk_eq(mk_eq(list_comb(cs[i].ctor, xs), list_comb(cs[i].ctor, ys)),
                                        conj)));
    }
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      auto zs = vars_for(cs[j].args, "'");
      std::vector<Term> all = xs;
      all.insert(all.end(), zs.begin(), zs.end());
      k.new_axiom(tyname + "_DISTINCT_" + cs[i].ctor.name() + "_" + cs[j].ctor.name(),
                  forall_all(all, mk_neg(mk_eq(list_comb(cs[i].ctor, xs), list_comb(cs[j].ctor, zs)))));
    }
  }
  Term p = Term::var("P", fun_ty(ty, bool_ty()));
  std::optional<Term> cases;
  for (const auto& c : cs) {
    auto xs = vars_for(c.args, "");
    Term concl = Term::comb(p, list_comb(c.ctor, xs));
    std::optional<Term> ih;
    for (const auto& x : xs)
      if (x.type() == ty) {
        Term px = Term::comb(p, x);
        ih = ih ? mk_conj(*ih, px) : px;
      }
    Term step = forall_all(xs, ih ? mk_imp(*ih, concl) : concl);
    cases = cases ? mk_conj(*cases, step) : step;
  }
  Term z = Term::var("x", ty);
  k.new_axiom(tyname + "_INDUCT",
              mk_forall(p, mk_imp(*cases, mk_forall(z, Term::comb(p, z)))));
}

}  // namespace

void install_bootstrap(Kernel& k) {
  Term t = Term::var("t", bool_ty());
  k.new_axiom("EXCLUDED_MIDDLE", mk_forall(t, mk_disj(t, mk_neg(t))));
  install_datatype(k, "type", type_ty(),
                   {ctor::ty_var(), ctor::ty_base(), ctor::ty_mono_cons(), ctor::ty_bi_cons()});
  install_datatype(k, "epsilon", epsilon_ty(),
                   {ctor::quo_var(), ctor::quo_const(), ctor::app(), ctor::abs(), ctor::quo()});
}

namespace {

bool arithmetic_term(const Term& t, bool allow_mul) {
  Type n = num_ty(), b = bool_ty();
  switch (t.kind()) {
    case Term::Kind::Var: return t.type() == n;
    case Term::Kind::Const: {
      const std::string& c = t.name();
      const Type& ty = t.type();
      if (c == "0") return true;
      if (c == "SUC" || c == "+" || c == "<=" || c == "T" || c == "F" || c == "~" ||
          c == "/\\" || c == "\\/" || c == "==>")
        return true;
      if (c == "*") return allow_mul;
      if (c == "=") return ty.domain() == n || ty.domain() == b;
      if (c == "!" || c == "?") return ty.domain() == fun_ty(n, b);
      return false;
    }
    case Term::Kind::Comb:
      return arithmetic_term(t.op(), allow_mul) && arithmetic_term(t.arg(), allow_mul);
    case Term::Kind::Abs:
      return t.binder().type() == n && arithmetic_term(t.body(), allow_mul);
    default: return false;
  }
}

}  // namespace

void install_arithmetic(Kernel& k) {
  Type n = num_ty();
  Type nn = fun_ty(n, n);
  k.new_constant("0", n);
  k.new_constant("SUC", nn);
  k.new_constant("+", fun_ty(n, nn));
  k.new_constant("*", fun_ty(n, nn));
  k.new_constant("<=", fun_ty(n, fun_ty(n, bool_ty())));
  Term p = Term::var("P", fun_ty(n, bool_ty()));
  Term m = Term::var("n", n);
  Term zero = Term::constant("0", n);
  Term suc = Term::constant("SUC", nn);
  Term step = mk_forall(m, mk_imp(Term::comb(p, m), Term::comb(p, Term::comb(suc, m))));
  k.new_axiom("num_INDUCTION",
              mk_forall(p, mk_imp(mk_conj(Term::comb(p, zero), step),
                                  mk_forall(m, Term::comb(p, m)))));
  for (bool mul : {true, false})
    k.new_decision_predicate(mul ? "peanoSyntax" : "presburgerSyntax",
                             [mul](const Term& c, const Signature& sig) {
                               try {
                                 Term t = construction_to_term(c, &sig);
                                 return t.type() == fun_ty(num_ty(), bool_ty()) &&
                                        arithmetic_term(t, mul);
                               } catch (const Error&) {
                                 return false;
                               }
                             });
}


Theorem define_arithmetic_class(Kernel& k, const std::string& class_name,
                                const std::string& syntax_name) {
  Term f = Term::var("f", epsilon_ty());
  Term v = Term::var("v", epsilon_ty());
  Term syn = Term::constant(syntax_name, fun_ty(epsilon_ty(), bool_ty()));
  Term body = mk_conj(Term::comb(syn, f), mk_forall(v, mk_neg(mk_is_free_in(v, f))));
  return k.new_basic_definition(class_name, Term::abs(f, body));
}

Theorem ARITH_CLASS_CONV(const Logic& lg, const std::string& class_name, const Term& c) {
  const Kernel& k = lg.kernel();
  auto def = k.definition(class_name);
  if (!def) fail(ErrorKind::UnknownConstant, "no definition for " + class_name);
  Theorem e = lg.AP_THM(*def, c);
  e = k.TRANS(e, lg.BETA_NORM_CONV(eq_rhs(e.conclusion())));
  Term rhs = eq_rhs(e.conclusion());
  auto [syn_c, closed] = need_binop(kAnd, rhs, "ARITH_CLASS_CONV");
  Theorem s = k.DECIDE(syn_c.op().name(), c);

  // |- ~conjunct  gives  |- ~(class c)
  auto refute = [&](const Theorem& neg, bool first) {
    Theorem whole = k.ASSUME(rhs);
    Theorem a = first ? lg.CONJUNCT1(whole) : lg.CONJUNCT2(whole);
    Theorem f = lg.MP(lg.NOT_ELIM(neg), a);
    return lg.REWRITE({lg.SYM(e)}, lg.NOT_INTRO(lg.DISCH(rhs, f)));
  };
  if (dest_neg(s.conclusion())) return refute(s, true);
  try {
    return k.EQ_MP(lg.SYM(e), lg.CONJ(s, k.CLOSED_CONV(c)));
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::FreeOccurrence) throw;
  }
  Term t = construction_to_term(*normalize_construction(c), &k.signature());
  Term w = *free_variables(t).begin();
  Term wc = term_to_construction(w);
  Theorem fi = k.IS_FREE_IN_CONV(wc, c);
  Theorem spec = lg.SPEC(wc, k.ASSUME(closed));
  Theorem absurd = lg.MP(lg.NOT_ELIM(spec), fi);
  return refute(lg.NOT_INTRO(lg.DISCH(closed, absurd)), false);
}

}  // namespace cqe
