#include <gtest/gtest.h>

#include "cqe/error.hpp"
#include "cqe/signature.hpp"
#include "cqe/term.hpp"

using namespace cqe;

namespace {

Type nb() { return fun_ty(num_ty(), bool_ty()); }
Term x_num() { return Term::var("x", num_ty()); }

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

}  // namespace

TEST(Types, PrintsRightAssociatedArrows) {
  EXPECT_EQ(to_string(fun_ty(nb(), bool_ty())), "(num->bool)->bool");
  EXPECT_EQ(to_string(fun_ty(num_ty(), nb())), "num->num->bool");
  EXPECT_EQ(to_string(Type::app("list", {Type::var("A")})), "('A)list");
}

TEST(Types, MatchAndSubstitute) {
  TypeSubst theta;
  Type a = Type::var("A");
  ASSERT_TRUE(match_type(fun_ty(a, a), nb(), theta) == false);
  theta.clear();
  ASSERT_TRUE(match_type(fun_ty(a, bool_ty()), nb(), theta));
  EXPECT_EQ(theta.at("A"), num_ty());
  EXPECT_EQ(type_subst(theta, fun_ty(a, a)), fun_ty(num_ty(), num_ty()));
}

TEST(Terms, TypeOfExamples) {
  Term f = Term::var("f", nb());
  EXPECT_EQ(type_of(Term::comb(f, x_num())), bool_ty());
  EXPECT_EQ(type_of(Term::abs(x_num(), Term::comb(f, x_num()))), nb());
  EXPECT_EQ(type_of(Term::quote(x_num())), epsilon_ty());
  Term e = Term::eval(Term::var("c", epsilon_ty()), num_ty());
  EXPECT_EQ(type_of(e), num_ty());
  EXPECT_EQ(kind_of([&] { Term::comb(f, f); }), ErrorKind::IllTyped);
  EXPECT_EQ(kind_of([&] { Term::eval(x_num(), num_ty()); }), ErrorKind::IllTyped);
}

TEST(Terms, StrayHoleRejected) {
  Term h = Term::hole(Term::var("c", epsilon_ty()), num_ty());
  EXPECT_EQ(kind_of([&] { type_of(h); }), ErrorKind::HoleOutsideQuotation);
  EXPECT_EQ(type_of(Term::quote(h)), epsilon_ty());
}

TEST(Terms, QuotationRejectsEvaluationAndNestedQuasiquote) {
  Term c = Term::var("c", epsilon_ty());
  EXPECT_EQ(kind_of([&] { Term::quote(Term::eval(c, bool_ty())); }), ErrorKind::NotEvalFree);
  Term inner = Term::quote(Term::hole(c, bool_ty()));
  EXPECT_EQ(kind_of([&] { Term::quote(inner); }), ErrorKind::NestedQuasiquote);
  // An evaluation inside a hole is fine.
  EXPECT_NO_THROW(Term::quote(Term::hole(Term::eval(c, epsilon_ty()), bool_ty())));
}

TEST(Terms, EvalFreeness) {
  Term c = Term::var("c", epsilon_ty());
  EXPECT_TRUE(is_eval_free(Term::quote(x_num())));
  EXPECT_FALSE(is_eval_free(Term::abs(c, Term::eval(c, bool_ty()))));
  EXPECT_FALSE(is_eval_free(Term::quote(Term::hole(Term::eval(c, epsilon_ty()), bool_ty()))));
}

TEST(Terms, FreeVariablesSkipQuotedPartsButSeeHoles) {
  Term c = Term::var("c", epsilon_ty());
  Term q = Term::quote(Term::comb(Term::var("f", nb()), Term::hole(c, num_ty())));
  TermSet fv = free_variables(q);
  EXPECT_EQ(fv.size(), 1u);
  EXPECT_TRUE(fv.count(c));
  EXPECT_TRUE(free_variables(Term::quote(x_num())).empty());
  Term lam = Term::abs(c, q);
  EXPECT_TRUE(free_variables(lam).empty());
  EXPECT_EQ(kind_of([&] { free_variables(Term::eval(c, bool_ty())); }), ErrorKind::NotEvalFree);
}

TEST(Terms, AlphaEquivalence) {
  Term y = Term::var("y", num_ty());
  Term f = Term::var("f", nb());
  EXPECT_TRUE(alpha_equivalent(Term::abs(x_num(), Term::comb(f, x_num())),
                               Term::abs(y, Term::comb(f, y))));
  EXPECT_FALSE(alpha_equivalent(Term::abs(x_num(), Term::comb(f, y)),
                                Term::abs(y, Term::comb(f, y))));
  // Quoted binders are literal.
  EXPECT_FALSE(alpha_equivalent(Term::quote(Term::abs(x_num(), x_num())),
                                Term::quote(Term::abs(y, y))));
  // Hole contents follow the outer binders.
  Term c = Term::var("c", epsilon_ty());
  Term d = Term::var("d", epsilon_ty());
  EXPECT_TRUE(alpha_equivalent(Term::abs(c, Term::quote(Term::hole(c, bool_ty()))),
                               Term::abs(d, Term::quote(Term::hole(d, bool_ty())))));
}

TEST(Terms, FreshVariant) {
  Term xp = Term::var("x'", num_ty());
  EXPECT_EQ(fresh_variant(x_num(), {x_num()}).name(), "x'");
  EXPECT_EQ(fresh_variant(xp, {xp}).name(), "x''");
  EXPECT_EQ(fresh_variant(x_num(), {x_num(), xp}).name(), "x''");
  EXPECT_EQ(fresh_variant(x_num(), {}).name(), "x");
}

TEST(Terms, StringLiterals) {
  EXPECT_EQ(encode_literal("x"), "\"x\"");
  EXPECT_EQ(encode_literal("a\"b\\"), "\"a\\\"b\\\\\"");
  for (std::string s : {"", "x", "a\"b", "\\", "x'"}) {
    EXPECT_EQ(*decode_literal(encode_literal(s)), s);
    EXPECT_EQ(*literal_value(string_literal(s)), s);
  }
  EXPECT_FALSE(decode_literal("\"a\"b\""));
  EXPECT_FALSE(decode_literal("x"));
}

TEST(Signature, BaseTableAndChecks) {
  Signature sig;
  EXPECT_EQ(*sig.arity("fun"), 2);
  EXPECT_EQ(*sig.arity("epsilon"), 0);
  EXPECT_TRUE(sig.is_instance("=", fun_ty(num_ty(), nb())));
  EXPECT_FALSE(sig.is_instance("=", fun_ty(num_ty(), fun_ty(bool_ty(), bool_ty()))));
  EXPECT_EQ(kind_of([&] { sig.add_type("bool", 0); }), ErrorKind::DuplicateName);
  EXPECT_EQ(kind_of([&] { sig.check_type(Type::app("list", {num_ty()})); }), ErrorKind::UnknownType);
  EXPECT_EQ(kind_of([&] { sig.check_term(Term::constant("c", num_ty())); }),
            ErrorKind::UnknownConstant);
  EXPECT_EQ(kind_of([&] { sig.check_term(Term::constant("\"x\"", num_ty())); }),
            ErrorKind::TypeMismatch);
  EXPECT_NO_THROW(sig.check_term(string_literal("x")));
}
