#include <gtest/gtest.h>

#include "cqe/constructions.hpp"
#include "cqe/frontend.hpp"
#include "cqe/logic.hpp"
#include "generators.hpp"

using namespace cqe;

namespace {

struct Env {
  Kernel k;
  Logic lg{(install_bootstrap(k), install_arithmetic(k), k)};
  Term p(const std::string& s) const { return parse_term(s, k.signature()); }
};

const char* kNumBool = "(TyBiCons \"fun\" (TyBase \"num\") (TyBase \"bool\"))";

Theorem lem_schema(Env& e) {
  Theorem em = e.lg.SPEC(e.p("eval (x:epsilon) to bool"), *e.k.axiom("EXCLUDED_MIDDLE"));
  return e.lg.GEN(e.p("(x:epsilon)"),
                  e.lg.DISCH(e.p("isExprType (x:epsilon) (TyBase \"bool\")"), em));
}

Theorem induction_schema(Env& e, const std::string& cls) {
  auto& k = e.k;
  auto& lg = e.lg;
  Theorem indinst = lg.SPEC(e.p("(P:num->bool)"), *k.axiom("num_INDUCTION"));
  Term n = e.p("(n:num)"), f = e.p("(f:epsilon)"), z = e.p("(z:num)");
  Theorem r = k.BETA_REVAL(n, f, z, fun_ty(num_ty(), bool_ty()));
  r = lg.REWRITE({k.BETA(e.p("(\\n:num. (f:epsilon)) (z:num)"))}, r);
  k.register_not_effective(lg.GEN(z, lg.UNDISCH(r)));
  Theorem body = k.INST({{e.p("(P:num->bool)"), e.p("eval (f:epsilon) to num->bool")}}, indinst);
  Term a = e.p("isExprType (f:epsilon) " + std::string(kNumBool) + " /\\ " + cls + " (f:epsilon)");
  Theorem as = k.ASSUME(a);
  Theorem unfold = lg.BETA_RULE(lg.AP_THM(*k.definition(cls), f));
  Theorem closed = lg.CONJUNCT2(k.EQ_MP(unfold, lg.CONJUNCT2(as)));
  Theorem h = lg.CONJ(lg.CONJUNCT1(as), lg.SPEC(e.p("Q_ (n:num) _Q"), closed));
  return lg.GEN(f, lg.DISCH(a, lg.PROVE_HYP(h, body)));
}

std::string schema_text(const std::string& cls) {
  std::string ev = "(eval (f:epsilon) to (num->bool))";
  return "!f:epsilon. (isExprType (f:epsilon) " + std::string(kNumBool) + ") /\\ (" + cls +
         " f) ==> " + ev + " 0 /\\ (!n:num. " + ev + " n ==> " + ev + " (SUC n)) ==> (!n:num. " +
         ev + " n)";
}

}  // namespace

TEST(Logic, DerivedRulesBasic) {
  Env e;
  auto& lg = e.lg;
  EXPECT_EQ(lg.TRUTH().conclusion(), logic::truth());
  Theorem a = e.k.ASSUME(e.p("(a:bool)")), b = e.k.ASSUME(e.p("(b:bool)"));
  Theorem ab = lg.CONJ(a, b);
  EXPECT_EQ(ab.conclusion(), e.p("(a:bool) /\\ (b:bool)"));
  EXPECT_EQ(lg.CONJUNCT1(ab).conclusion(), e.p("(a:bool)"));
  EXPECT_EQ(lg.CONJUNCT2(ab).conclusion(), e.p("(b:bool)"));
  Theorem imp = lg.DISCH(e.p("(a:bool)"), b);
  EXPECT_EQ(imp.conclusion(), e.p("(a:bool) ==> (b:bool)"));
  EXPECT_EQ(imp.hypotheses().size(), 1u);
  Theorem mp = lg.MP(imp, a);
  EXPECT_EQ(mp.conclusion(), e.p("(b:bool)"));
  Theorem refl = e.k.REFL(e.p("(x:num)"));
  Theorem gen = lg.GEN(e.p("(x:num)"), refl);
  EXPECT_EQ(gen.conclusion(), e.p("!x:num. x = x"));
  EXPECT_EQ(lg.SPEC(e.p("SUC 0"), gen).conclusion(), e.p("SUC 0 = SUC 0"));
  EXPECT_THROW(lg.GEN(e.p("(b:bool)"), b), Error);
  EXPECT_TRUE(gen.axioms().empty());
}

TEST(Logic, NegationRoundTrip) {
  Env e;
  Theorem imp = e.k.ASSUME(e.p("(a:bool) ==> F"));
  Theorem n = e.lg.NOT_INTRO(imp);
  EXPECT_EQ(n.conclusion(), e.p("~(a:bool)"));
  EXPECT_EQ(e.lg.NOT_ELIM(n).conclusion(), imp.conclusion());
}

TEST(Logic, DisquoteConv) {
  Env e;
  Term t = e.p("\\x:num. SUC x + (y:num)");
  Theorem th = e.lg.DISQUOTE_CONV(Term::quote(t), t.type());
  EXPECT_TRUE(th.hypotheses().empty());
  EXPECT_EQ(eq_rhs(th.conclusion()), t);
  EXPECT_EQ(eq_lhs(th.conclusion()), Term::eval(Term::quote(t), t.type()));
  EXPECT_THROW(e.lg.DISQUOTE_CONV(Term::quote(t), num_ty()), Error);
}

TEST(Logic, LemSchemaAndInstance) {
  Env e;
  Theorem schema = lem_schema(e);
  EXPECT_TRUE(schema.hypotheses().empty());
  EXPECT_TRUE(alpha_equivalent(
      schema.conclusion(),
      e.p("!x:epsilon. isExprType x (TyBase \"bool\") ==> ((eval x to bool) \\/ ~(eval x to bool))")));

  Term qp = e.p("Q_ (p:bool) _Q");
  Theorem inst = e.lg.SPEC(qp, schema);
  Term redex = strip_comb(strip_comb(inst.conclusion()).second[1]).second[0];
  Theorem th = e.lg.REWRITE({e.lg.EVAL_REDEX_CONV(redex), e.lg.DISQUOTE_CONV(qp, bool_ty())}, inst);
  th = e.lg.MP(th, e.k.IS_EXPR_TYPE_CONV(qp, type_to_construction(bool_ty())));
  EXPECT_TRUE(th.hypotheses().empty());
  EXPECT_EQ(th.conclusion(), e.p("(p:bool) \\/ ~(p:bool)"));
  EXPECT_EQ(th.axioms(), std::set<std::string>{"EXCLUDED_MIDDLE"});
}

TEST(Logic, PeanoInductionSchema) {
  Env e;
  define_arithmetic_class(e.k, "isPeano", "peanoSyntax");
  Theorem th = induction_schema(e, "isPeano");
  EXPECT_TRUE(th.hypotheses().empty());
  EXPECT_TRUE(alpha_equivalent(th.conclusion(), e.p(schema_text("isPeano"))));
  EXPECT_EQ(th.axioms(), std::set<std::string>{"num_INDUCTION"});
}

TEST(Logic, PresburgerInductionSchema) {
  Env e;
  define_arithmetic_class(e.k, "isPresburger", "presburgerSyntax");
  Theorem th = induction_schema(e, "isPresburger");
  EXPECT_TRUE(th.hypotheses().empty());
  EXPECT_TRUE(alpha_equivalent(th.conclusion(), e.p(schema_text("isPresburger"))));
}

TEST(Logic, InductionInstWithoutRegistryIsBlocked) {
  Env e;
  Theorem indinst = e.lg.SPEC(e.p("(P:num->bool)"), *e.k.axiom("num_INDUCTION"));
  try {
    e.k.INST({{e.p("(P:num->bool)"), e.p("eval (f:epsilon) to num->bool")}}, indinst);
    FAIL() << "expected a blocked substitution";
  } catch (const SubstitutionBlocked& b) {
    ASSERT_EQ(b.alternatives().size(), 2u);
    EXPECT_EQ(b.alternatives()[0].variable, e.p("(n:num)"));
    EXPECT_EQ(b.alternatives()[0].term, e.p("eval (f:epsilon) to num->bool"));
  }
}

TEST(Logic, ArithmeticClassDecisions) {
  Env e;
  define_arithmetic_class(e.k, "isPeano", "peanoSyntax");
  define_arithmetic_class(e.k, "isPresburger", "presburgerSyntax");
  auto decide = [&](const char* cls, const char* t) {
    Term c = term_to_construction(e.p(t));
    Theorem th = ARITH_CLASS_CONV(e.lg, cls, c);
    EXPECT_TRUE(th.hypotheses().empty());
    return !logic::dest_neg(th.conclusion()).has_value();
  };
  EXPECT_TRUE(decide("isPeano", "\\n:num. n = n"));
  EXPECT_TRUE(decide("isPeano", "\\n:num. !m:num. n * m <= SUC n * m"));
  EXPECT_FALSE(decide("isPresburger", "\\n:num. !m:num. n * m <= SUC n * m"));
  EXPECT_TRUE(decide("isPresburger", "\\n:num. ?m:num. m + m = n"));
  EXPECT_FALSE(decide("isPeano", "\\n:num. n = (k:num)"));
  EXPECT_FALSE(decide("isPeano", "\\b:bool. b"));
  EXPECT_FALSE(decide("isPeano", "\\n:num. isFreeIn Q_ n _Q Q_ n _Q"));
  Theorem bad = ARITH_CLASS_CONV(e.lg, "isPeano", e.p("App (QuoVar \"x\" (TyBase \"num\")) (QuoVar \"x\" (TyBase \"num\"))"));
  EXPECT_TRUE(logic::dest_neg(bad.conclusion()).has_value());
}

TEST(Logic, DisjunctionAndFalsity) {
  Env e;
  auto& lg = e.lg;
  Term p = e.p("(p:bool)"), q = e.p("(q:bool)"), r = e.p("(r:bool)");
  Theorem d1 = lg.DISJ1(e.k.ASSUME(p), q);
  EXPECT_EQ(d1.conclusion(), e.p("(p:bool) \\/ (q:bool)"));
  Theorem d2 = lg.DISJ2(p, e.k.ASSUME(q));
  EXPECT_EQ(d2.conclusion(), d1.conclusion());
  // p \/ q, p ==> r, q ==> r |- r
  Theorem pr = lg.UNDISCH(e.k.ASSUME(logic::mk_imp(p, r)));
  Theorem qr = lg.UNDISCH(e.k.ASSUME(logic::mk_imp(q, r)));
  Theorem c = lg.DISJ_CASES(e.k.ASSUME(d1.conclusion()), pr, qr);
  EXPECT_EQ(c.conclusion(), r);
  EXPECT_EQ(c.hypotheses().size(), 3u);
  EXPECT_THROW(lg.DISJ_CASES(e.k.ASSUME(d1.conclusion()), pr, e.k.ASSUME(q)), Error);

  Theorem nf = lg.EQF_INTRO(e.k.ASSUME(logic::mk_neg(p)));
  EXPECT_EQ(nf.conclusion(), mk_eq(p, logic::falsity()));
  EXPECT_EQ(lg.EQF_ELIM(nf).conclusion(), logic::mk_neg(p));
  Theorem any = lg.CONTR(q, e.k.ASSUME(logic::falsity()));
  EXPECT_EQ(any.conclusion(), q);
}

TEST(Logic, DatatypeFacts) {
  Env e;
  int distinct = 0, inj = 0;
  for (const auto& [name, th] : e.k.axioms()) {
    if (name.rfind("epsilon_DISTINCT_", 0) == 0) ++distinct;
    if (name.rfind("epsilon_INJ_", 0) == 0) ++inj;
  }
  EXPECT_EQ(distinct, 10);
  EXPECT_EQ(inj, 5);
  ASSERT_TRUE(e.k.axiom("epsilon_DISTINCT_QuoVar_App"));
  EXPECT_TRUE(alpha_equivalent(
      e.k.axiom("epsilon_DISTINCT_QuoVar_App")->conclusion(),
      e.p("!s0:str. !t1:type. !e0':epsilon. !e1':epsilon. ~(QuoVar s0 t1 = App e0' e1')")));
  EXPECT_TRUE(alpha_equivalent(
      e.k.axiom("epsilon_INJ_Abs")->conclusion(),
      e.p("!e0:epsilon. !e1:epsilon. !e0':epsilon. !e1':epsilon. "
          "(Abs e0 e1 = Abs e0' e1') = (e0 = e0' /\\ e1 = e1')")));
  // The induction axiom instantiated at a concrete predicate.
  Theorem ind = e.lg.SPEC(e.p("\\c:epsilon. isFreeIn c c \\/ ~isFreeIn c c"),
                          *e.k.axiom("epsilon_INDUCT"));
  Theorem b = e.lg.BETA_RULE(ind);
  EXPECT_TRUE(b.hypotheses().empty());
  EXPECT_TRUE(logic::dest_binop(logic::kImp, b.conclusion()));
}

TEST(Logic, ExprTypeConvAgreesWithMeta) {
  Env e;
  gen::TermGen g(7);
  for (int i = 0; i < 1000; ++i) {
    Type ty = g.type(2);
    if (type_has_vars(ty)) ty = num_ty();
    Term t = g.eval_free(ty, 4);
    Term c = term_to_construction(t);
    Type other = g.pick(2) ? ty : g.type(1);
    if (type_has_vars(other)) other = bool_ty();
    Term tyc = type_to_construction(other);
    Theorem th = e.k.IS_EXPR_TYPE_CONV(c, tyc);
    bool meta = is_expr_type_meta(c, tyc, &e.k.signature());
    ASSERT_EQ(!logic::dest_neg(th.conclusion()).has_value(), meta);
    ASSERT_EQ(th.conclusion(), meta ? logic::mk_is_expr_type(c, tyc)
                                    : logic::mk_neg(logic::mk_is_expr_type(c, tyc)));
  }
}
