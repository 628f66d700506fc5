#include "cqe/constructions.hpp"
#include "cqe/kernel.hpp"

namespace cqe {

using namespace logic;

namespace {

Term quote_of(const Term& t) { return Term::quote(t); }

void need_epsilon(const Term& t, const char* rule) {
  if (t.type() != epsilon_ty())
    fail(ErrorKind::TypeMismatch, std::string(rule) + ": expected a term of type epsilon");
}

}  // namespace

Term Kernel::representable_type(const Type& ty) const {
  sig_.check_type(ty);
  try {
    return type_to_construction(ty);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::UnsupportedArity) fail(ErrorKind::TypeArgMalformed, e.what());
    throw;
  }
}

Theorem Kernel::LAW_OF_QUO_STEP(const Term& q) const {
  if (!q.is_quote()) fail(ErrorKind::RuleShape, "LAW_OF_QUO: not a quotation");
  check_term(q);
  const Term& b = q.body();
  Term rhs = q;
  switch (b.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Const:
      representable_type(b.type());
      rhs = term_to_construction(b);
      break;
    case Term::Kind::Comb: rhs = list_comb(ctor::app(), {quote_of(b.op()), quote_of(b.arg())}); break;
    case Term::Kind::Abs:
      rhs = list_comb(ctor::abs(), {quote_of(b.binder()), quote_of(b.body())});
      break;
    case Term::Kind::Quote: rhs = Term::comb(ctor::quo(), b); break;
    case Term::Kind::Hole: rhs = b.content(); break;
    case Term::Kind::Eval: fail(ErrorKind::NotEvalFree, "LAW_OF_QUO: evaluation in quotation");
  }
  return make({}, mk_eq(q, rhs), {});
}

Theorem Kernel::LAW_OF_QUO(const Term& q) const {
  Theorem step = LAW_OF_QUO_STEP(q);
  const Term& rhs = eq_rhs(step.conclusion());
  auto [head, args] = strip_comb(rhs);
  if (head != ctor::app() && head != ctor::abs() && head != ctor::quo()) return step;
  // Rewrite each quoted argument; Abs keeps its quoted binder as an atom.
  Theorem acc = REFL(head);
  for (const auto& a : args) acc = MK_COMB(acc, a.is_quote() ? LAW_OF_QUO(a) : REFL(a));
  return TRANS(step, acc);
}

Theorem Kernel::DISQUO(const Term& q, const Type& ty) const {
  if (!q.is_quote()) fail(ErrorKind::RuleShape, "DISQUO: not a quotation");
  check_term(q);
  const Term& b = q.body();
  if (!b.is_var() && !b.is_const())
    fail(ErrorKind::NotAtomicQuote, "DISQUO: quotation of a non-atomic term");
  if (b.type() != ty) fail(ErrorKind::TypeMismatch, "DISQUO: type does not match the atom");
  return make({}, mk_eq(Term::eval(q, ty), b), {});
}

Theorem Kernel::APP_SPLIT(const Term& a, const Term& b, const Type& alpha,
                          const Type& beta) const {
  need_epsilon(a, "APP_SPLIT");
  need_epsilon(b, "APP_SPLIT");
  check_term(a);
  check_term(b);
  Type fty = fun_ty(alpha, beta);
  Term pre = mk_conj(mk_is_expr_type(a, representable_type(fty)),
                     mk_is_expr_type(b, representable_type(alpha)));
  Term lhs = Term::eval(list_comb(ctor::app(), {a, b}), beta);
  Term rhs = Term::comb(Term::eval(a, fty), Term::eval(b, alpha));
  return make({}, mk_imp(pre, mk_eq(lhs, rhs)), {});
}

Theorem Kernel::ABS_SPLIT(const Term& x, const Term& a, const Type& beta) const {
  if (!x.is_var()) fail(ErrorKind::NotAVariable, "ABS_SPLIT: expected a variable");
  need_epsilon(a, "ABS_SPLIT");
  check_term(x);
  check_term(a);
  Term qx = Term::quote(x);
  Term qa = Term::quote(a);
  Term pre = mk_conj(mk_is_expr_type(a, representable_type(beta)),
                     mk_neg(mk_is_free_in(qx, qa)));
  Type fty = fun_ty(x.type(), beta);
  representable_type(fty);
  Term lhs = Term::eval(list_comb(ctor::abs(), {qx, a}), fty);
  Term rhs = Term::abs(x, Term::eval(a, beta));
  return make({}, mk_imp(pre, mk_eq(lhs, rhs)), {});
}

Theorem Kernel::QUOTABLE(const Term& a) const {
  need_epsilon(a, "QUOTABLE");
  check_term(a);
  Term pre = mk_is_expr_type(a, representable_type(epsilon_ty()));
  return make({}, mk_imp(pre, mk_eq(Term::eval(Term::comb(ctor::quo(), a), epsilon_ty()), a)), {});
}

Theorem Kernel::BETA_EVAL(const Term& x, const Term& b, const Type& beta) const {
  if (!x.is_var()) fail(ErrorKind::NotAVariable, "BETA_EVAL: expected a variable");
  need_epsilon(b, "BETA_EVAL");
  check_term(x);
  check_term(b);
  sig_.check_type(beta);
  Term e = Term::eval(b, beta);
  return make({}, mk_eq(Term::comb(Term::abs(x, e), x), e), {});
}

Theorem Kernel::BETA_EVAL(const Term& redex) const {
  if (!redex.is_comb() || !redex.op().is_abs() || !redex.op().body().is_eval())
    fail(ErrorKind::RuleShape, "BETA_EVAL: expected (\\x. eval B to ty) x");
  if (redex.arg() != redex.op().binder())
    fail(ErrorKind::RuleShape, "BETA_EVAL: argument differs from the binder");
  const Term& e = redex.op().body();
  return BETA_EVAL(redex.arg(), e.content(), e.annotation());
}

Theorem Kernel::BETA_REVAL(const Term& x, const Term& b, const Term& a, const Type& beta) const {
  if (!x.is_var()) fail(ErrorKind::NotAVariable, "BETA_REVAL: expected a variable");
  need_epsilon(b, "BETA_REVAL");
  if (a.type() != x.type()) fail(ErrorKind::TypeMismatch, "BETA_REVAL: argument type");
  check_term(x);
  check_term(b);
  check_term(a);
  Term c = Term::comb(Term::abs(x, b), a);
  Term pre = mk_conj(mk_is_expr_type(c, representable_type(beta)),
                     mk_neg(mk_is_free_in(Term::quote(x), c)));
  Term lhs = Term::comb(Term::abs(x, Term::eval(b, beta)), a);
  return make({}, mk_imp(pre, mk_eq(lhs, Term::eval(c, beta))), {});
}

Theorem Kernel::NOT_FREE_OR_EFFECTIVE_IN(const Term& x, const Term& b) const {
  if (!x.is_var()) fail(ErrorKind::NotAVariable, "NOT_FREE_OR_EFFECTIVE_IN: expected a variable");
  check_term(x);
  check_term(b);
  if (!b.eval_free()) fail(ErrorKind::NotEvalFree, "NOT_FREE_OR_EFFECTIVE_IN: term has an evaluation");
  if (is_free_in(x, b))
    fail(ErrorKind::FreeOccurrence, "NOT_FREE_OR_EFFECTIVE_IN: " + x.name() + " is free");
  return make({}, not_effective(x, b), {});
}

Theorem Kernel::NEITHER_EFFECTIVE(const Term& x, const Term& y, const Term& a,
                                  const Term& b) const {
  if (!x.is_var() || !y.is_var()) fail(ErrorKind::NotAVariable, "NEITHER_EFFECTIVE: expected variables");
  if (x == y) fail(ErrorKind::SameVariable, "NEITHER_EFFECTIVE: variables must differ");
  if (a.type() != x.type()) fail(ErrorKind::TypeMismatch, "NEITHER_EFFECTIVE: argument type");
  for (const Term* t : {&x, &y, &a, &b}) check_term(*t);
  Term pre = mk_disj(not_effective(y, a), not_effective(x, b));
  Term lhs = Term::comb(Term::abs(x, Term::abs(y, b)), a);
  Term rhs = Term::abs(y, Term::comb(Term::abs(x, b), a));
  return make({}, mk_imp(pre, mk_eq(lhs, rhs)), {});
}

// --- registry --------------------------------------------------------------

void Kernel::register_not_effective(const Theorem& th) {
  auto sc = dest_not_effective(th.conclusion());
  if (!sc) fail(ErrorKind::WrongShape, "not a \"not effective in\" theorem");
  for (auto& e : registry_)
    if (e.variable == sc->variable && e.term == sc->term) {
      if (th.hypotheses().size() < e.theorem.hypotheses().size()) e.theorem = th;
      return;
    }
  registry_.push_back({sc->variable, sc->term, th});
}

const RegistryEntry* Kernel::find_not_effective(const Term& x, const Term& t) const {
  for (const auto& e : registry_)
    if (e.variable == x && e.term == t) return &e;
  return nullptr;
}

// --- trusted decision procedures -----------------------------------------

namespace {

Term normalized(const Term& t, const char* rule) {
  auto n = normalize_construction(t);
  if (!n) fail(ErrorKind::NotClosed, std::string(rule) + ": argument is not a closed construction");
  return *n;
}

Term decided(const Term& p, bool v) { return v ? p : mk_neg(p); }

}  // namespace

Theorem Kernel::IS_EXPR_TYPE_CONV(const Term& c, const Term& tyc) const {
  need_epsilon(c, "IS_EXPR_TYPE_CONV");
  if (tyc.type() != type_ty()) fail(ErrorKind::TypeMismatch, "IS_EXPR_TYPE_CONV: expected a type");
  check_term(c);
  check_term(tyc);
  bool v = is_expr_type_meta(normalized(c, "IS_EXPR_TYPE_CONV"),
                             normalized(tyc, "IS_EXPR_TYPE_CONV"), &sig_);
  return make({}, decided(mk_is_expr_type(c, tyc), v), {}, "IS_EXPR_TYPE_CONV");
}

Theorem Kernel::IS_FREE_IN_CONV(const Term& xc, const Term& bc) const {
  need_epsilon(xc, "IS_FREE_IN_CONV");
  need_epsilon(bc, "IS_FREE_IN_CONV");
  check_term(xc);
  check_term(bc);
  bool v = is_free_in_meta(normalized(xc, "IS_FREE_IN_CONV"), normalized(bc, "IS_FREE_IN_CONV"),
                           &sig_);
  return make({}, decided(mk_is_free_in(xc, bc), v), {}, "IS_FREE_IN_CONV");
}

Theorem Kernel::CLOSED_CONV(const Term& c) const {
  need_epsilon(c, "CLOSED_CONV");
  check_term(c);
  Term t = construction_to_term(normalized(c, "CLOSED_CONV"), &sig_);
  if (!free_variables(t).empty())
    fail(ErrorKind::FreeOccurrence, "CLOSED_CONV: represented term has free variables");
  Term v = Term::var("v", epsilon_ty());
  return make({}, mk_forall(v, mk_neg(mk_is_free_in(v, c))), {}, "CLOSED_CONV");
}

void Kernel::new_decision_predicate(const std::string& name, Oracle oracle) {
  if (oracles_.count(name)) fail(ErrorKind::DuplicateName, "predicate " + name + " already exists");
  if (!sig_.has_constant(name)) new_constant(name, fun_ty(epsilon_ty(), bool_ty()));
  if (*sig_.constant_type(name) != fun_ty(epsilon_ty(), bool_ty()))
    fail(ErrorKind::TypeMismatch, "predicate " + name + " must have type epsilon->bool");
  oracles_.emplace(name, std::move(oracle));
}

Theorem Kernel::DECIDE(const std::string& name, const Term& c) const {
  auto it = oracles_.find(name);
  if (it == oracles_.end()) fail(ErrorKind::UnknownConstant, "no decision procedure for " + name);
  need_epsilon(c, "DECIDE");
  check_term(c);
  bool v = it->second(normalized(c, "DECIDE"), sig_);
  Term p = Term::comb(Term::constant(name, fun_ty(epsilon_ty(), bool_ty())), c);
  return make({}, decided(p, v), {}, "DECIDE:" + name);
}

}  // namespace cqe
