#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cqe/error.hpp"
#include "cqe/signature.hpp"
#include "cqe/term.hpp"

namespace cqe {

// A sequent hypotheses |- conclusion. Only Kernel can create one.
class Theorem {
 public:
  const std::vector<Term>& hypotheses() const { return hyps_; }
  const Term& conclusion() const { return concl_; }
  // Names of axioms this theorem depends on.
  const std::set<std::string>& axioms() const { return axioms_; }
  // Names of trusted decision procedures used in its derivation.
  const std::set<std::string>& oracles() const { return oracles_; }

 private:
  friend class Kernel;
  Theorem(std::vector<Term> hyps, Term concl, std::set<std::string> axioms,
          std::set<std::string> oracles)
      : hyps_(std::move(hyps)),
        concl_(std::move(concl)),
        axioms_(std::move(axioms)),
        oracles_(std::move(oracles)) {}

  std::vector<Term> hyps_;
  Term concl_;
  std::set<std::string> axioms_;
  std::set<std::string> oracles_;
};

// (variable, replacement) pairs, applied simultaneously.
using Bindings = std::vector<std::pair<Term, Term>>;

// Side condition "variable is not effective in term".
struct SideCondition {
  Term variable;
  Term term;
};

// Raised when substitution would need an unproved side condition. Proving
// and registering either alternative lets the substitution go through.
class SubstitutionBlocked : public Error {
 public:
  SubstitutionBlocked(std::vector<SideCondition> alternatives, const std::string& what)
      : Error(ErrorKind::SubstitutionBlocked, what), alternatives_(std::move(alternatives)) {}
  const std::vector<SideCondition>& alternatives() const { return alternatives_; }

 private:
  std::vector<SideCondition> alternatives_;
};

struct RegistryEntry {
  Term variable;
  Term term;
  Theorem theorem;
};

// Names of the logical constants the kernel installs at construction.
namespace logic {
inline constexpr const char* kTrue = "T";
inline constexpr const char* kFalse = "F";
inline constexpr const char* kAnd = "/\\";
inline constexpr const char* kOr = "\\/";
inline constexpr const char* kImp = "==>";
inline constexpr const char* kNot = "~";
inline constexpr const char* kForall = "!";
inline constexpr const char* kExists = "?";
inline constexpr const char* kIsExprType = "isExprType";
inline constexpr const char* kIsFreeIn = "isFreeIn";

Term truth();
Term falsity();
Term mk_conj(const Term& a, const Term& b);
Term mk_disj(const Term& a, const Term& b);
Term mk_imp(const Term& a, const Term& b);
Term mk_neg(const Term& p);
Term mk_forall(const Term& v, const Term& body);
Term mk_exists(const Term& v, const Term& body);
Term mk_is_expr_type(const Term& c, const Term& tyc);
Term mk_is_free_in(const Term& xc, const Term& bc);

// Binary connective application `op a b`; returns nullopt otherwise.
std::optional<std::pair<Term, Term>> dest_binop(const std::string& op, const Term& t);
std::optional<Term> dest_neg(const Term& t);
// Binder application `q (\v. body)` for q in {!, ?}.
std::optional<std::pair<Term, Term>> dest_binder(const std::string& q, const Term& t);

// ~(?z. ~((\x. b) z = b)) with z fresh for x and b.
Term not_effective(const Term& x, const Term& b);
// Recognizes both ~(?z. ~((\x. b) z = b)) and !z. (\x. b) z = b.
std::optional<SideCondition> dest_not_effective(const Term& t);
}  // namespace logic

// The trusted core: signature, axioms, definitions, primitive and
// quotation/evaluation rules, and the side-condition registry.
class Kernel {
 public:
  using Oracle = std::function<bool(const Term& construction, const Signature&)>;

  Kernel();

  const Signature& signature() const { return sig_; }
  void check_term(const Term& t) const { sig_.check_term(t); }

  // Extension.
  void new_type(const std::string& name, int arity);
  void new_constant(const std::string& name, const Type& ty);
  Theorem new_axiom(const std::string& name, const Term& p);
  Theorem new_basic_definition(const std::string& name, const Term& body);
  const std::vector<std::pair<std::string, Theorem>>& axioms() const { return axioms_; }
  const std::vector<std::pair<std::string, Theorem>>& definitions() const { return definitions_; }
  std::optional<Theorem> definition(const std::string& name) const;
  std::optional<Theorem> axiom(const std::string& name) const;

  // Primitive rules.
  Theorem REFL(const Term& t) const;
  Theorem TRANS(const Theorem& ab, const Theorem& bc) const;
  Theorem MK_COMB(const Theorem& fg, const Theorem& xy) const;
  Theorem ABS(const Term& x, const Theorem& th) const;
  Theorem BETA(const Term& redex) const;
  Theorem ASSUME(const Term& p) const;
  Theorem EQ_MP(const Theorem& pq, const Theorem& p) const;
  Theorem DEDUCT_ANTISYM(const Theorem& a, const Theorem& b) const;
  Theorem INST_TYPE(const TypeSubst& theta, const Theorem& th) const;
  Theorem INST(const Bindings& theta, const Theorem& th) const;
  // |- a = b  gives  |- (eval a to ty) = (eval b to ty).
  Theorem EVAL_CONG(const Theorem& ab, const Type& ty) const;

  // Substitution with quotation opacity, hole transparency, suspension at
  // evaluations, and registry-backed side conditions. When `used` is given,
  // registry entries consulted are appended to it.
  Term vsubst(const Bindings& theta, const Term& t,
              std::vector<const RegistryEntry*>* used = nullptr) const;
  Term inst_type(const TypeSubst& theta, const Term& t) const;

  // Quotation and evaluation rules.
  Theorem LAW_OF_QUO(const Term& q) const;       // |- q = E(body), fully unfolded
  Theorem LAW_OF_QUO_STEP(const Term& q) const;  // one level
  Theorem DISQUO(const Term& q, const Type& ty) const;
  Theorem APP_SPLIT(const Term& a, const Term& b, const Type& alpha, const Type& beta) const;
  Theorem ABS_SPLIT(const Term& x, const Term& a, const Type& beta) const;
  Theorem QUOTABLE(const Term& a) const;
  Theorem BETA_EVAL(const Term& x, const Term& b, const Type& beta) const;
  Theorem BETA_EVAL(const Term& redex) const;
  Theorem BETA_REVAL(const Term& x, const Term& b, const Term& a, const Type& beta) const;
  Theorem NOT_FREE_OR_EFFECTIVE_IN(const Term& x, const Term& b) const;
  Theorem NEITHER_EFFECTIVE(const Term& x, const Term& y, const Term& a, const Term& b) const;

  // Registry of proved "not effective in" facts.
  void register_not_effective(const Theorem& th);
  const RegistryEntry* find_not_effective(const Term& x, const Term& t) const;
  const std::vector<RegistryEntry>& registry() const { return registry_; }

  // Trusted decision procedures (recorded in Theorem::oracles).
  Theorem IS_EXPR_TYPE_CONV(const Term& c, const Term& tyc) const;
  Theorem IS_FREE_IN_CONV(const Term& xc, const Term& bc) const;
  // |- !v. ~(isFreeIn v c) for c representing a closed term.
  Theorem CLOSED_CONV(const Term& c) const;
  void new_decision_predicate(const std::string& name, Oracle oracle);
  Theorem DECIDE(const std::string& name, const Term& c) const;

 private:
  Theorem make(std::vector<Term> hyps, Term concl,
               std::initializer_list<const Theorem*> parents,
               const std::string& oracle = {}) const;
  Theorem finish_subst(const Theorem& base, std::vector<Term> hyps, Term concl,
                       const std::vector<const RegistryEntry*>& used) const;
  Term representable_type(const Type& ty) const;

  Signature sig_;
  std::vector<std::pair<std::string, Theorem>> axioms_;
  std::vector<std::pair<std::string, Theorem>> definitions_;
  std::vector<RegistryEntry> registry_;
  std::map<std::string, Oracle> oracles_;
};

}  // namespace cqe
