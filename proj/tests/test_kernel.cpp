#include <gtest/gtest.h>

#include "cqe/constructions.hpp"
#include "cqe/frontend.hpp"
#include "cqe/kernel.hpp"
#include "cqe/logic.hpp"

using namespace cqe;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::Io;
}

struct K {
  Kernel k;
  K() { install_arithmetic(k); }
  Term p(const std::string& s) const { return parse_term(s, k.signature()); }
};

Term nb_eval() { return Term::eval(Term::var("f", epsilon_ty()), fun_ty(num_ty(), bool_ty())); }

}  // namespace

TEST(Kernel, EqualityRules) {
  K e;
  Term x = e.p("(x:num)");
  Theorem r = e.k.REFL(x);
  EXPECT_EQ(r.conclusion(), mk_eq(x, x));
  Theorem ab = e.k.ASSUME(e.p("(a:num) = (b:num)"));
  Theorem bc = e.k.ASSUME(e.p("(b:num) = (c:num)"));
  Theorem ac = e.k.TRANS(ab, bc);
  EXPECT_EQ(ac.conclusion(), e.p("(a:num) = (c:num)"));
  EXPECT_EQ(ac.hypotheses().size(), 2u);
  EXPECT_EQ(kind_of([&] { e.k.TRANS(bc, ab); }), ErrorKind::WrongShape);
  EXPECT_EQ(kind_of([&] { e.k.ASSUME(x); }), ErrorKind::TypeMismatch);

  Theorem fg = e.k.ASSUME(e.p("(f:num->num) = (g:num->num)"));
  EXPECT_EQ(e.k.MK_COMB(fg, ab).conclusion(), e.p("(f:num->num) (a:num) = (g:num->num) (b:num)"));

  Theorem lam = e.k.ABS(x, e.k.REFL(e.p("SUC (x:num)")));
  EXPECT_EQ(lam.conclusion(), e.p("(\\x:num. SUC x) = (\\x:num. SUC x)"));
  Theorem hx = e.k.ASSUME(e.p("(x:num) = 0"));
  EXPECT_EQ(kind_of([&] { e.k.ABS(x, hx); }), ErrorKind::FreeOccurrence);
}

TEST(Kernel, BetaAndDeduction) {
  K e;
  Theorem b = e.k.BETA(e.p("(\\x:num. SUC x) 0"));
  EXPECT_EQ(b.conclusion(), e.p("(\\x:num. SUC x) 0 = SUC 0"));
  EXPECT_EQ(kind_of([&] { e.k.BETA(e.p("SUC 0")); }), ErrorKind::RuleShape);

  Theorem pa = e.k.ASSUME(e.p("(p:bool)"));
  Theorem qa = e.k.ASSUME(e.p("(q:bool)"));
  Theorem d = e.k.DEDUCT_ANTISYM(pa, qa);
  EXPECT_EQ(d.conclusion(), e.p("(p:bool) = (q:bool)"));
  EXPECT_EQ(d.hypotheses().size(), 2u);
  EXPECT_EQ(e.k.EQ_MP(d, pa).conclusion(), e.p("(q:bool)"));
}

TEST(Kernel, EvalCongruence) {
  K e;
  Theorem ab = e.k.ASSUME(e.p("(a:epsilon) = (b:epsilon)"));
  Theorem c = e.k.EVAL_CONG(ab, num_ty());
  EXPECT_EQ(c.conclusion(), e.p("(eval (a:epsilon) to num) = (eval (b:epsilon) to num)"));
  EXPECT_EQ(kind_of([&] { e.k.EVAL_CONG(e.k.REFL(e.p("0")), num_ty()); }), ErrorKind::TypeMismatch);
}

TEST(Kernel, AxiomsAndDefinitions) {
  K e;
  Theorem ax = e.k.new_axiom("AX", e.p("(p:bool)"));
  EXPECT_EQ(ax.axioms(), std::set<std::string>{"AX"});
  EXPECT_EQ(kind_of([&] { e.k.new_axiom("AX", e.p("(q:bool)")); }), ErrorKind::DuplicateName);
  Theorem d = e.k.new_basic_definition("two", e.p("SUC (SUC 0)"));
  EXPECT_EQ(d.conclusion(), e.p("two = SUC (SUC 0)"));
  EXPECT_TRUE(d.axioms().empty());
  EXPECT_EQ(kind_of([&] { e.k.new_basic_definition("bad", e.p("SUC (y:num)")); }), ErrorKind::OpenBody);
  EXPECT_EQ(kind_of([&] { e.k.new_basic_definition("ev", e.p("eval Q_ 0 _Q to num")); }),
            ErrorKind::NotEvalFree);
}

TEST(Kernel, InstTypeRejectsPolymorphicQuotation) {
  K e;
  Theorem th = e.k.REFL(e.p("Q_ (x:'A) _Q"));
  EXPECT_EQ(kind_of([&] { e.k.INST_TYPE({{"A", num_ty()}}, th); }),
            ErrorKind::QuotationTypePolymorphism);
  Theorem ok = e.k.INST_TYPE({{"A", num_ty()}}, e.k.REFL(e.p("(x:'A)")));
  EXPECT_EQ(ok.conclusion(), e.p("(x:num) = (x:num)"));
}

TEST(Kernel, SubstitutionLeavesQuotationsAlone) {
  K e;
  Term q = e.p("Q_ (\\y:num. (x:num) + y) _Q");
  EXPECT_EQ(e.k.vsubst({{e.p("(x:num)"), e.p("0")}}, q), q);
  Theorem th = e.k.INST({{e.p("(x:num)"), e.p("0")}}, e.k.REFL(q));
  EXPECT_EQ(th.conclusion(), mk_eq(q, q));
}

TEST(Kernel, SubstitutionReachesHoleContents) {
  K e;
  Term c = Term::var("c", epsilon_ty());
  Term x = Term::var("x", num_ty());
  Term q = Term::quote(Term::comb(Term::comb(Term::constant("+", e.p("(+)").type()), x),
                                  Term::hole(c, num_ty())));
  Term zero = e.p("Q_ 0 _Q");
  Term got = e.k.vsubst({{c, zero}, {x, e.p("SUC 0")}}, q);
  Term want = Term::quote(Term::comb(Term::comb(Term::constant("+", e.p("(+)").type()), x),
                                     Term::hole(zero, num_ty())));
  EXPECT_EQ(got, want);
}

TEST(Kernel, SubstitutionSuspendsAtEvaluation) {
  K e;
  Term c = Term::var("c", epsilon_ty());
  Term ev = Term::eval(c, num_ty());
  Term a = e.p("Q_ 0 _Q");
  EXPECT_EQ(e.k.vsubst({{c, a}}, ev), Term::comb(Term::abs(c, ev), a));
  Term d = Term::var("d", epsilon_ty());
  Term ev2 = Term::eval(e.p("App (c:epsilon) (d:epsilon)"), num_ty());
  Term b = e.p("Q_ SUC _Q");
  Term got = e.k.vsubst({{c, b}, {d, a}}, ev2);
  EXPECT_EQ(got, Term::comb(Term::abs(c, Term::comb(Term::abs(d, ev2), a)), b));
}

TEST(Kernel, BlockedSubstitutionReportsAndRegistryUnblocks) {
  K e;
  Term P = e.p("(P:num->bool)");
  Term n = e.p("(n:num)");
  Theorem th = e.k.REFL(e.p("\\n:num. (P:num->bool) n"));
  try {
    e.k.INST({{P, nb_eval()}}, th);
    FAIL() << "expected SubstitutionBlocked";
  } catch (const SubstitutionBlocked& b) {
    ASSERT_EQ(b.alternatives().size(), 2u);
    EXPECT_EQ(b.alternatives()[0].variable, n);
    EXPECT_EQ(b.alternatives()[0].term, nb_eval());
    EXPECT_EQ(b.alternatives()[1].variable, P);
  }
  Term nei = logic::not_effective(n, nb_eval());
  Theorem ax = e.k.new_axiom("nei", nei);
  e.k.register_not_effective(ax);
  e.k.register_not_effective(ax);
  EXPECT_EQ(e.k.registry().size(), 1u);
  Theorem done = e.k.INST({{P, nb_eval()}}, th);
  Term lam = Term::abs(n, Term::comb(nb_eval(), n));
  EXPECT_EQ(done.conclusion(), mk_eq(lam, lam));
  EXPECT_TRUE(done.axioms().count("nei"));
  EXPECT_EQ(kind_of([&] { e.k.register_not_effective(e.k.REFL(n)); }), ErrorKind::WrongShape);
}

TEST(Kernel, RegistryHypothesesCarryOver) {
  Kernel k;
  Logic lg(k);
  Term n = Term::var("n", num_ty()), f = Term::var("f", epsilon_ty()), z = Term::var("z", num_ty());
  Theorem r = k.BETA_REVAL(n, f, z, fun_ty(num_ty(), bool_ty()));
  r = lg.REWRITE({k.BETA(Term::comb(Term::abs(n, f), z))}, r);
  Theorem nei = lg.GEN(z, lg.UNDISCH(r));
  ASSERT_EQ(nei.hypotheses().size(), 1u);
  k.register_not_effective(nei);
  Term P = Term::var("P", fun_ty(num_ty(), bool_ty()));
  Theorem th = k.INST({{P, nb_eval()}}, k.REFL(Term::abs(n, Term::comb(P, n))));
  ASSERT_EQ(th.hypotheses().size(), 1u);
  EXPECT_EQ(th.hypotheses()[0], nei.hypotheses()[0]);
}

TEST(Kernel, NotEffectiveRules) {
  K e;
  Term x = e.p("(x:num)");
  Theorem th = e.k.NOT_FREE_OR_EFFECTIVE_IN(x, e.p("SUC (y:num)"));
  EXPECT_EQ(th.conclusion(), logic::not_effective(x, e.p("SUC (y:num)")));
  EXPECT_EQ(kind_of([&] { e.k.NOT_FREE_OR_EFFECTIVE_IN(x, e.p("SUC x")); }), ErrorKind::FreeOccurrence);
  EXPECT_EQ(kind_of([&] { e.k.NOT_FREE_OR_EFFECTIVE_IN(x, nb_eval()); }), ErrorKind::NotEvalFree);
  Theorem ne = e.k.NEITHER_EFFECTIVE(x, e.p("(y:num)"), e.p("0"), e.p("(x:num) + (y:num)"));
  auto parts = logic::dest_binop(logic::kImp, ne.conclusion());
  ASSERT_TRUE(parts);
  EXPECT_EQ(parts->second, e.p("(\\x:num. \\y:num. x + y) 0 = (\\y:num. (\\x:num. x + y) 0)"));
}

TEST(Kernel, LawOfQuotationAndDisquotation) {
  K e;
  Term t = e.p("\\x:num. x + (y:num)");
  Theorem q = e.k.LAW_OF_QUO(Term::quote(t));
  EXPECT_EQ(q.conclusion(), mk_eq(Term::quote(t), term_to_construction(t)));
  Term qx = e.p("Q_ (x:num) _Q");
  EXPECT_EQ(e.k.DISQUO(qx, num_ty()).conclusion(), mk_eq(Term::eval(qx, num_ty()), e.p("(x:num)")));
  EXPECT_EQ(kind_of([&] { e.k.DISQUO(qx, bool_ty()); }), ErrorKind::TypeMismatch);
  EXPECT_EQ(kind_of([&] { e.k.DISQUO(Term::quote(t), t.type()); }), ErrorKind::NotAtomicQuote);
}

TEST(Kernel, QuotationOverEvaluationRejected) {
  K e;
  EXPECT_EQ(kind_of([&] { Term::quote(nb_eval()); }), ErrorKind::NotEvalFree);
  EXPECT_THROW(e.p("Q_ eval (c:epsilon) to num _Q"), Error);
}

TEST(Kernel, BetaRevalGuardsDoubleSubstitution) {
  Kernel k;
  Logic lg(k);
  Term x = Term::var("x", epsilon_ty());
  Term qx = Term::quote(x);
  Theorem th = k.BETA_REVAL(x, x, qx, epsilon_ty());
  auto imp = logic::dest_binop(logic::kImp, th.conclusion());
  ASSERT_TRUE(imp) << "must stay conditional";
  auto conj = logic::dest_binop(logic::kAnd, imp->first);
  ASSERT_TRUE(conj);
  Term guard = *logic::dest_neg(conj->second);
  Theorem norm = lg.BETA_NORM_CONV(guard);
  Theorem free = k.IS_FREE_IN_CONV(qx, qx);
  EXPECT_EQ(free.conclusion(), eq_rhs(norm.conclusion()));
  Theorem refuted = k.EQ_MP(lg.SYM(norm), free);
  EXPECT_EQ(refuted.conclusion(), guard);
  EXPECT_THROW(lg.PROVE_SYNTAX(imp->first), Error);
}

TEST(Kernel, OraclesAreRecorded) {
  K e;
  Term c = e.p("Q_ 0 _Q");
  Theorem th = e.k.IS_EXPR_TYPE_CONV(c, type_to_construction(num_ty()));
  EXPECT_EQ(th.oracles(), std::set<std::string>{"IS_EXPR_TYPE_CONV"});
  EXPECT_EQ(th.conclusion(), logic::mk_is_expr_type(c, type_to_construction(num_ty())));
  Theorem no = e.k.IS_EXPR_TYPE_CONV(c, type_to_construction(bool_ty()));
  EXPECT_TRUE(logic::dest_neg(no.conclusion()));
  EXPECT_EQ(kind_of([&] { e.k.IS_FREE_IN_CONV(e.p("(v:epsilon)"), c); }), ErrorKind::NotClosed);
  e.k.new_decision_predicate("isZero", [](const Term& t, const Signature&) {
    return t == term_to_construction(Term::constant("0", num_ty()));
  });
  EXPECT_EQ(e.k.DECIDE("isZero", c).oracles(), std::set<std::string>{"DECIDE:isZero"});
  EXPECT_TRUE(logic::dest_neg(e.k.DECIDE("isZero", e.p("Q_ SUC 0 _Q")).conclusion()));
}
