#include <gtest/gtest.h>

#include "cqe/error.hpp"
#include "cqe/frontend.hpp"
#include "cqe/kernel.hpp"
#include "generators.hpp"

using namespace cqe;

namespace {

ErrorKind parse_error(const Kernel& k, const std::string& s) {
  try {
    parse_term(s, k.signature());
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "parsed: " << s;
  return ErrorKind::Io;
}

}  // namespace

TEST(Frontend, ParsesTypes) {
  Kernel k;
  EXPECT_EQ(parse_type("num->bool->bool", k.signature()),
            fun_ty(num_ty(), fun_ty(bool_ty(), bool_ty())));
  EXPECT_EQ(parse_type("('A->bool)->bool", k.signature()),
            fun_ty(fun_ty(Type::var("A"), bool_ty()), bool_ty()));
  EXPECT_THROW(parse_type("nosuch", k.signature()), Error);
}

TEST(Frontend, ParsesConnectivesWithPrecedence) {
  Kernel k;
  Term t = parse_term("p ==> q \\/ r /\\ ~s", k.signature());
  Term p = Term::var("p", bool_ty()), q = Term::var("q", bool_ty());
  Term r = Term::var("r", bool_ty()), s = Term::var("s", bool_ty());
  using namespace logic;
  EXPECT_EQ(t, mk_imp(p, mk_disj(q, mk_conj(r, mk_neg(s)))));
  EXPECT_EQ(parse_term("!x:num. x = x", k.signature()),
            mk_forall(Term::var("x", num_ty()), mk_eq(Term::var("x", num_ty()), Term::var("x", num_ty()))));
}

TEST(Frontend, QuotationsHolesAndEvaluations) {
  Kernel k;
  Term t = parse_term("\\c. Q_ \\c:bool. (H_ c _H : bool) _Q", k.signature());
  ASSERT_TRUE(t.is_abs());
  EXPECT_EQ(t.binder().type(), epsilon_ty());
  Term e = parse_term("eval Q_ (x:num) _Q to num", k.signature());
  EXPECT_TRUE(e.is_eval());
  EXPECT_EQ(e.type(), num_ty());
  EXPECT_EQ(parse_term("Q_ x:bool _Q", k.signature()), Term::quote(Term::var("x", bool_ty())));
  EXPECT_EQ(parse_term("eval f:epsilon to (num->bool)", k.signature()),
            Term::eval(Term::var("f", epsilon_ty()), fun_ty(num_ty(), bool_ty())));
  EXPECT_EQ(parse_error(k, "H_ c _H"), ErrorKind::ElaborationError);
  EXPECT_EQ(parse_error(k, "Q_ eval c to bool _Q"), ErrorKind::NotEvalFree);
  EXPECT_EQ(parse_error(k, "x ==>"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error(k, "f x /\\ f"), ErrorKind::ElaborationError);
}

TEST(Frontend, VariablesOfDifferentTypesShareAName) {
  Kernel k;
  Term t = parse_term("(x:num) = (x:num) /\\ (x:bool)", k.signature());
  EXPECT_EQ(free_variables(t).size(), 2u);
}

TEST(Frontend, PrintParseRoundTrip) {
  Kernel k;
  cqe::gen::TermGen gen(11);
  for (int i = 0; i < 300; ++i) {
    Term t = gen.general(gen.type(2), 4);
    std::string s = print_term(t, k.signature());
    Term back = parse_term(s, k.signature());
    ASSERT_EQ(back, t) << s;
    ASSERT_EQ(print_term(back, k.signature()), s);
  }
}
