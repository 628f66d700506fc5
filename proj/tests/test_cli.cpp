#include <gtest/gtest.h>

#include <sstream>

#include "cqe/frontend.hpp"
#include "cqe/session.hpp"

using namespace cqe;

namespace {

std::string script(const std::string& name) { return std::string(CQE_SOURCE_DIR) + "/scripts/" + name; }

struct Outcome {
  int rc;
  std::string out, err;
};

Outcome run_file(Session& s, const std::string& name) {
  std::ostringstream out, err;
  int rc = run_script(s, script(name), out, err);
  return {rc, out.str(), err.str()};
}

Outcome run_text(Session& s, const std::string& text) {
  std::ostringstream out, err;
  int rc = run_script_text(s, text, "<test>", out, err);
  return {rc, out.str(), err.str()};
}

}  // namespace

TEST(Script, LayoutAndContinuations) {
  auto cmds = parse_script("# c\nthm a := SPEC\n    `x:num`\n\n  th\necho hi\n", "f");
  ASSERT_EQ(cmds.size(), 2u);
  EXPECT_EQ(cmds[0].keyword, "thm");
  EXPECT_EQ(cmds[0].text, "a := SPEC\n`x:num`\nth");
  EXPECT_EQ(cmds[0].span.line, 2);
  EXPECT_EQ(cmds[0].span.end_line, 5);
  EXPECT_EQ(cmds[1].span.line, 6);
  EXPECT_THROW(parse_script("  indented first\n", "f"), Error);
}

TEST(Script, ShippedScriptsSucceed) {
  for (const char* name : {"lem.cqe", "peano.cqe", "presburger.cqe"}) {
    Session s;
    Outcome r = run_file(s, name);
    EXPECT_EQ(r.rc, kExitOk) << name << "\n" << r.err;
  }
}

TEST(Script, LemInstanceIsExact) {
  Session s;
  ASSERT_EQ(run_file(s, "lem.cqe").rc, kExitOk);
  auto th = s.lookup("lem_p");
  ASSERT_TRUE(th);
  EXPECT_TRUE(th->hypotheses().empty());
  EXPECT_EQ(th->conclusion(), parse_term("(p:bool) \\/ ~(p:bool)", s.kernel().signature()));
}

TEST(Script, InstWithoutRegistrationReportsSideCondition) {
  Session s;
  Outcome r = run_file(s, "inst_without_nei.cqe");
  EXPECT_EQ(r.rc, kExitProofFailure);
  EXPECT_NE(r.err.find("SubstitutionBlocked"), std::string::npos);
  EXPECT_NE(r.err.find("n not effective in (eval f to num->bool)"), std::string::npos);
  EXPECT_NE(r.err.find("inst_without_nei.cqe:4:"), std::string::npos);
}

TEST(Script, ExitCodes) {
  Session s;
  EXPECT_EQ(run_text(s, "thm a := TRUTH\n").rc, kExitOk);
  EXPECT_EQ(run_text(s, "thm a := TRUTH\n").rc, kExitProofFailure);  // duplicate name
  EXPECT_EQ(run_text(s, "thm b := MP a a\n").rc, kExitProofFailure);
  EXPECT_EQ(run_text(s, "thm c := SPEC `x +` a\n").rc, kExitInputFailure);
  EXPECT_EQ(run_text(s, "frobnicate x\n").rc, kExitInputFailure);
  EXPECT_EQ(run_text(s, "thm d := REFL (x\n").rc, kExitInputFailure);
  EXPECT_EQ(run_text(s, "check a matches F\n").rc, kExitProofFailure);
  EXPECT_EQ(run_text(s, "check a matches T\n").rc, kExitOk);
  std::ostringstream out, err;
  EXPECT_EQ(run_script(s, "/nonexistent/file.cqe", out, err), kExitInputFailure);
  // A failed command leaves the session usable.
  EXPECT_EQ(run_text(s, "thm e := SYM (REFL `0`)\n").rc, kExitOk);
  EXPECT_EQ(s.theorems().size(), 2u);
}

TEST(Script, DeclarationsAndDefinitions) {
  Session s;
  Outcome r = run_text(s,
                   "constant c : num\n"
                   "axiom c_AX := c = SUC 0\n"
                   "define two := SUC (SUC 0)\n"
                   "thm t := TRANS (SYM two_DEF) (REFL `two`)\n"
                   "echo done\n");
  EXPECT_EQ(r.rc, kExitOk) << r.err;
  EXPECT_NE(r.out.find("done"), std::string::npos);
  EXPECT_TRUE(s.lookup("c_AX"));
  EXPECT_TRUE(s.lookup("two_DEF"));
  EXPECT_EQ(run_text(s, "axiom two_DEF := T\n").rc, kExitProofFailure);
}

TEST(Export, DeterministicAndTreesRoundTrip) {
  std::string first;
  for (const char* format : {"json-like", "sexp"}) {
    Session a, b;
    ASSERT_EQ(run_file(a, "peano.cqe").rc, kExitOk);
    ASSERT_EQ(run_file(b, "peano.cqe").rc, kExitOk);
    EXPECT_EQ(export_theorems(a, format), export_theorems(b, format));
  }
  Session s;
  ASSERT_EQ(run_file(s, "lem.cqe").rc, kExitOk);
  auto doc = export_document(s);
  ASSERT_EQ(doc["theorems"].size(), s.theorems().size());
  std::vector<std::string> keys;
  for (auto it = doc["theorems"][0].begin(); it != doc["theorems"][0].end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"name", "hypotheses", "conclusion", "axioms", "oracles"}));
  const Signature& sig = s.kernel().signature();
  for (std::size_t i = 0; i < s.theorems().size(); ++i) {
    const auto& e = doc["theorems"][i];
    const Theorem& th = s.theorems()[i].second;
    EXPECT_EQ(term_from_tree(e["conclusion"]["tree"], sig), th.conclusion());
    EXPECT_EQ(parse_term(e["conclusion"]["text"].get<std::string>(), sig), th.conclusion());
  }
  const auto& last = doc["theorems"].back();
  EXPECT_EQ(last["name"], "lem_p");
  EXPECT_TRUE(last["hypotheses"].empty());
  EXPECT_THROW(export_theorems(s, "xml"), Error);
}

TEST(Export, ReplayInFreshSession) {
  Session s;
  ASSERT_EQ(run_file(s, "peano.cqe").rc, kExitOk);
  auto doc = export_document(s);
  // A fresh session replays the script, then checks every exported
  // hypothesis-free theorem against its re-derived counterpart.
  Session fresh;
  ASSERT_EQ(run_file(fresh, "peano.cqe").rc, kExitOk);
  std::string checks;
  for (const auto& e : doc["theorems"])
    if (e["hypotheses"].empty())
      checks += "check " + e["name"].get<std::string>() + " matches " +
                e["conclusion"]["text"].get<std::string>() + "\n";
  Outcome r = run_text(fresh, checks);
  EXPECT_EQ(r.rc, kExitOk) << r.err;
  EXPECT_EQ(export_theorems(fresh, "sexp"), export_theorems(s, "sexp"));
}
