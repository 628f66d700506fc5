#include "cqe/kernel.hpp"

#include <algorithm>

#include "cqe/constructions.hpp"

namespace cqe {

namespace logic {

namespace {
Type bbb() { return fun_ty(bool_ty(), fun_ty(bool_ty(), bool_ty())); }
Term binder_const(const char* q, const Type& ty) {
  return Term::constant(q, fun_ty(fun_ty(ty, bool_ty()), bool_ty()));
}
}  // namespace

Term truth() { static const Term t = Term::constant(kTrue, bool_ty()); return t; }
Term falsity() { static const Term t = Term::constant(kFalse, bool_ty()); return t; }
Term mk_conj(const Term& a, const Term& b) { return mk_binop(kAnd, a, b); }
Term mk_disj(const Term& a, const Term& b) { return mk_binop(kOr, a, b); }
Term mk_imp(const Term& a, const Term& b) { return mk_binop(kImp, a, b); }
Term mk_neg(const Term& p) {
  static const Term n = Term::constant(kNot, fun_ty(bool_ty(), bool_ty()));
  return Term::comb(n, p);
}
Term mk_forall(const Term& v, const Term& body) {
  return Term::comb(binder_const(kForall, v.type()), Term::abs(v, body));
}
Term mk_exists(const Term& v, const Term& body) {
  return Term::comb(binder_const(kExists, v.type()), Term::abs(v, body));
}
Term mk_is_expr_type(const Term& c, const Term& tyc) {
  static const Term k =
      Term::constant(kIsExprType, fun_ty(epsilon_ty(), fun_ty(type_ty(), bool_ty())));
  return list_comb(k, {c, tyc});
}
Term mk_is_free_in(const Term& xc, const Term& bc) {
  static const Term k =
      Term::constant(kIsFreeIn, fun_ty(epsilon_ty(), fun_ty(epsilon_ty(), bool_ty())));
  return list_comb(k, {xc, bc});
}

std::optional<std::pair<Term, Term>> dest_binop(const std::string& op, const Term& t) {
  if (!t.is_comb() || !t.op().is_comb()) return std::nullopt;
  const Term& h = t.op().op();
  if (!h.is_const() || h.name() != op) return std::nullopt;
  if (op != "=" && h.type() != bbb()) return std::nullopt;
  return std::make_pair(t.op().arg(), t.arg());
}

std::optional<Term> dest_neg(const Term& t) {
  if (!t.is_comb() || !t.op().is_const() || t.op().name() != kNot) return std::nullopt;
  return t.arg();
}

std::optional<std::pair<Term, Term>> dest_binder(const std::string& q, const Term& t) {
  if (!t.is_comb() || !t.op().is_const() || t.op().name() != q || !t.arg().is_abs())
    return std::nullopt;
  return std::make_pair(t.arg().binder(), t.arg().body());
}

Term not_effective(const Term& x, const Term& b) {
  TermSet avoid = all_variables(b);
  avoid.insert(x);
  Term z = fresh_variant(Term::var("z", x.type()), avoid);
  return mk_neg(mk_exists(z, mk_neg(mk_eq(Term::comb(Term::abs(x, b), z), b))));
}

std::optional<SideCondition> dest_not_effective(const Term& t) {
  Term z = t, eq = t;
  if (auto n = dest_neg(t)) {
    auto ex = dest_binder(kExists, *n);
    if (!ex) return std::nullopt;
    auto inner = dest_neg(ex->second);
    if (!inner) return std::nullopt;
    z = ex->first;
    eq = *inner;
  } else if (auto all = dest_binder(kForall, t)) {
    z = all->first;
    eq = all->second;
  } else {
    return std::nullopt;
  }
  if (!is_eq(eq)) return std::nullopt;
  const Term& l = eq_lhs(eq);
  const Term& b = eq_rhs(eq);
  if (!l.is_comb() || !l.op().is_abs() || l.arg() != z) return std::nullopt;
  const Term& x = l.op().binder();
  if (l.op().body() != b || x == z || x.type() != z.type()) return std::nullopt;
  if (all_variables(b).count(z)) return std::nullopt;
  return SideCondition{x, b};
}

}  // namespace logic

using namespace logic;

namespace {

void add_hyp(std::vector<Term>& hyps, const Term& h) {
  for (const auto& g : hyps)
    if (alpha_equivalent(g, h)) return;
  hyps.push_back(h);
}

std::vector<Term> hyp_union(const std::vector<Term>& a, const std::vector<Term>& b) {
  std::vector<Term> out;
  for (const auto& h : a) add_hyp(out, h);
  for (const auto& h : b) add_hyp(out, h);
  return out;
}

std::vector<Term> hyp_remove(const std::vector<Term>& a, const Term& p) {
  std::vector<Term> out;
  for (const auto& h : a)
    if (!alpha_equivalent(h, p)) out.push_back(h);
  return out;
}

void type_vars_of(const Term& t, std::vector<std::string>& out) {
  collect_type_vars(t.type(), out);
  if (t.is_quote() || t.is_hole() || t.is_eval()) collect_type_vars(t.annotation(), out);
  switch (t.kind()) {
    case Term::Kind::Comb:
      type_vars_of(t.op(), out);
      type_vars_of(t.arg(), out);
      break;
    case Term::Kind::Abs:
      type_vars_of(t.binder(), out);
      type_vars_of(t.body(), out);
      break;
    case Term::Kind::Quote: type_vars_of(t.body(), out); break;
    case Term::Kind::Hole:
    case Term::Kind::Eval: type_vars_of(t.content(), out); break;
    default: break;
  }
}

void require_bool(const Term& p, const char* rule) {
  if (p.type() != bool_ty())
    fail(ErrorKind::TypeMismatch, std::string(rule) + ": expected a boolean term");
}

const Term& need_eq(const Theorem& th, const char* rule) {
  if (!is_eq(th.conclusion()))
    fail(ErrorKind::RuleShape, std::string(rule) + ": conclusion is not an equation");
  return th.conclusion();
}

}  // namespace

Kernel::Kernel() {
  register_construction_constants(sig_);
  sig_.add_constant(kIsExprType, fun_ty(epsilon_ty(), fun_ty(type_ty(), bool_ty())));
  sig_.add_constant(kIsFreeIn, fun_ty(epsilon_ty(), fun_ty(epsilon_ty(), bool_ty())));

  Type b = bool_ty();
  Type a = Type::var("A");
  Term p = Term::var("p", b), q = Term::var("q", b), r = Term::var("r", b);
  Term pa = Term::var("P", fun_ty(a, b));
  Term xa = Term::var("x", a);
  Term f = Term::var("f", fun_ty(b, fun_ty(b, b)));

  Term id = Term::abs(p, p);
  new_basic_definition(kTrue, mk_eq(id, id));
  new_basic_definition(kForall, Term::abs(pa, mk_eq(pa, Term::abs(xa, truth()))));
  new_basic_definition(
      kAnd, Term::abs(p, Term::abs(q, mk_eq(Term::abs(f, list_comb(f, {p, q})),
                                            Term::abs(f, list_comb(f, {truth(), truth()}))))));
  new_basic_definition(kImp, Term::abs(p, Term::abs(q, mk_eq(mk_conj(p, q), p))));
  new_basic_definition(
      kExists,
      Term::abs(pa, mk_forall(q, mk_imp(mk_forall(xa, mk_imp(Term::comb(pa, xa), q)), q))));
  new_basic_definition(
      kOr, Term::abs(p, Term::abs(q, mk_forall(r, mk_imp(mk_imp(p, r),
                                                         mk_imp(mk_imp(q, r), r))))));
  new_basic_definition(kFalse, mk_forall(p, p));
  new_basic_definition(kNot, Term::abs(p, mk_imp(p, falsity())));
}

Theorem Kernel::make(std::vector<Term> hyps, Term concl,
                     std::initializer_list<const Theorem*> parents,
                     const std::string& oracle) const {
  std::set<std::string> ax, orc;
  for (const Theorem* th : parents) {
    ax.insert(th->axioms_.begin(), th->axioms_.end());
    orc.insert(th->oracles_.begin(), th->oracles_.end());
  }
  if (!oracle.empty()) orc.insert(oracle);
  std::vector<Term> hs;
  for (const auto& h : hyps) add_hyp(hs, h);
  return Theorem(std::move(hs), std::move(concl), std::move(ax), std::move(orc));
}

// --- extension -------------------------------------------------------------

void Kernel::new_type(const std::string& name, int arity) { sig_.add_type(name, arity); }

void Kernel::new_constant(const std::string& name, const Type& ty) {
  sig_.add_constant(name, ty);
}

Theorem Kernel::new_axiom(const std::string& name, const Term& p) {
  check_term(p);
  require_bool(p, "new_axiom");
  if (axiom(name)) fail(ErrorKind::DuplicateName, "axiom " + name + " already exists");
  Theorem th({}, p, {name}, {});
  axioms_.emplace_back(name, th);
  return th;
}

Theorem Kernel::new_basic_definition(const std::string& name, const Term& body) {
  check_term(body);
  if (!body.eval_free()) fail(ErrorKind::NotEvalFree, "definition body contains an evaluation");
  if (!free_variables(body).empty())
    fail(ErrorKind::OpenBody, "definition body of " + name + " has free variables");
  std::vector<std::string> used, allowed;
  type_vars_of(body, used);
  collect_type_vars(body.type(), allowed);
  for (const auto& v : used)
    if (std::find(allowed.begin(), allowed.end(), v) == allowed.end())
      fail(ErrorKind::OpenBody, "type variable '" + v + " of " + name + " not in its type");
  sig_.add_constant(name, body.type());
  Theorem th({}, mk_eq(Term::constant(name, body.type()), body), {}, {});
  definitions_.emplace_back(name, th);
  return th;
}

std::optional<Theorem> Kernel::definition(const std::string& name) const {
  for (const auto& [n, th] : definitions_)
    if (n == name) return th;
  return std::nullopt;
}

std::optional<Theorem> Kernel::axiom(const std::string& name) const {
  for (const auto& [n, th] : axioms_)
    if (n == name) return th;
  return std::nullopt;
}

// --- primitive rules -------------------------------------------------------

Theorem Kernel::REFL(const Term& t) const {
  check_term(t);
  return make({}, mk_eq(t, t), {});
}

Theorem Kernel::TRANS(const Theorem& ab, const Theorem& bc) const {
  const Term& l = need_eq(ab, "TRANS");
  const Term& r = need_eq(bc, "TRANS");
  if (!alpha_equivalent(eq_rhs(l), eq_lhs(r)))
    fail(ErrorKind::WrongShape, "TRANS: middle terms differ");
  return make(hyp_union(ab.hypotheses(), bc.hypotheses()), mk_eq(eq_lhs(l), eq_rhs(r)),
              {&ab, &bc});
}

Theorem Kernel::MK_COMB(const Theorem& fg, const Theorem& xy) const {
  const Term& a = need_eq(fg, "MK_COMB");
  const Term& b = need_eq(xy, "MK_COMB");
  Term l = Term::comb(eq_lhs(a), eq_lhs(b));
  Term r = Term::comb(eq_rhs(a), eq_rhs(b));
  return make(hyp_union(fg.hypotheses(), xy.hypotheses()), mk_eq(l, r), {&fg, &xy});
}

Theorem Kernel::ABS(const Term& x, const Theorem& th) const {
  if (!x.is_var()) fail(ErrorKind::NotAVariable, "ABS: binder must be a variable");
  check_term(x);
  const Term& eq = need_eq(th, "ABS");
  std::vector<Term> hyps = th.hypotheses();
  std::set<std::string> ax = th.axioms(), orc = th.oracles();
  for (const auto& h : th.hypotheses()) {
    if (h.eval_free()) {
      if (is_free_in(x, h))
        fail(ErrorKind::FreeOccurrence, "ABS: " + x.name() + " is free in a hypothesis");
      continue;
    }
    const RegistryEntry* e = find_not_effective(x, h);
    bool usable = e != nullptr;
    if (e)
      for (const auto& g : e->theorem.hypotheses())
        if (!g.eval_free() || is_free_in(x, g)) usable = false;
    if (!usable)
      throw SubstitutionBlocked({{x, h}}, "ABS: " + x.name() +
                                              " may be effective in a hypothesis");
    for (const auto& g : e->theorem.hypotheses()) add_hyp(hyps, g);
    ax.insert(e->theorem.axioms().begin(), e->theorem.axioms().end());
    orc.insert(e->theorem.oracles().begin(), e->theorem.oracles().end());
  }
  Term c = mk_eq(Term::abs(x, eq_lhs(eq)), Term::abs(x, eq_rhs(eq)));
  return Theorem(std::move(hyps), std::move(c), std::move(ax), std::move(orc));
}

Theorem Kernel::finish_subst(const Theorem& base, std::vector<Term> hyps, Term concl,
                             const std::vector<const RegistryEntry*>& used) const {
  std::set<std::string> ax = base.axioms(), orc = base.oracles();
  std::vector<Term> hs;
  for (const auto& h : hyps) add_hyp(hs, h);
  for (const RegistryEntry* e : used) {
    for (const auto& g : e->theorem.hypotheses()) add_hyp(hs, g);
    ax.insert(e->theorem.axioms().begin(), e->theorem.axioms().end());
    orc.insert(e->theorem.oracles().begin(), e->theorem.oracles().end());
  }
  return Theorem(std::move(hs), std::move(concl), std::move(ax), std::move(orc));
}

Theorem Kernel::BETA(const Term& redex) const {
  check_term(redex);
  if (!redex.is_comb() || !redex.op().is_abs())
    fail(ErrorKind::RuleShape, "BETA: not a beta-redex");
  std::vector<const RegistryEntry*> used;
  Term r = vsubst({{redex.op().binder(), redex.arg()}}, redex.op().body(), &used);
  Theorem none({}, redex, {}, {});
  return finish_subst(none, {}, mk_eq(redex, r), used);
}

Theorem Kernel::ASSUME(const Term& p) const {
  check_term(p);
  require_bool(p, "ASSUME");
  return make({p}, p, {});
}

Theorem Kernel::EQ_MP(const Theorem& pq, const Theorem& p) const {
  const Term& eq = need_eq(pq, "EQ_MP");
  if (!alpha_equivalent(eq_lhs(eq), p.conclusion()))
    fail(ErrorKind::WrongShape, "EQ_MP: antecedent does not match");
  return make(hyp_union(pq.hypotheses(), p.hypotheses()), eq_rhs(eq), {&pq, &p});
}

Theorem Kernel::DEDUCT_ANTISYM(const Theorem& a, const Theorem& b) const {
  std::vector<Term> hyps = hyp_union(hyp_remove(a.hypotheses(), b.conclusion()),
                                     hyp_remove(b.hypotheses(), a.conclusion()));
  return make(std::move(hyps), mk_eq(a.conclusion(), b.conclusion()), {&a, &b});
}

Theorem Kernel::INST_TYPE(const TypeSubst& theta, const Theorem& th) const {
  for (const auto& [v, ty] : theta) sig_.check_type(ty);
  std::vector<Term> hyps;
  for (const auto& h : th.hypotheses()) hyps.push_back(inst_type(theta, h));
  return make(std::move(hyps), inst_type(theta, th.conclusion()), {&th});
}

Theorem Kernel::INST(const Bindings& theta, const Theorem& th) const {
  for (const auto& [x, v] : theta) check_term(v);
  std::vector<const RegistryEntry*> used;
  std::vector<Term> hyps;
  for (const auto& h : th.hypotheses()) hyps.push_back(vsubst(theta, h, &used));
  Term c = vsubst(theta, th.conclusion(), &used);
  return finish_subst(th, std::move(hyps), std::move(c), used);
}

Theorem Kernel::EVAL_CONG(const Theorem& ab, const Type& ty) const {
  const Term& eq = need_eq(ab, "EVAL_CONG");
  if (eq_lhs(eq).type() != epsilon_ty())
    fail(ErrorKind::TypeMismatch, "EVAL_CONG: equation is not between constructions");
  sig_.check_type(ty);
  return make(ab.hypotheses(),
              mk_eq(Term::eval(eq_lhs(eq), ty), Term::eval(eq_rhs(eq), ty)), {&ab});
}

}  // namespace cqe
