#pragma once

#include <optional>
#include <vector>

#include "cqe/kernel.hpp"

namespace cqe {

// Derived rules. Everything here goes through the Kernel's primitive
// rules; nothing in this layer can create a Theorem directly.
class Logic {
 public:
  explicit Logic(Kernel& k);

  Kernel& kernel() const { return k_; }

  // Equality.
  Theorem SYM(const Theorem& th) const;
  Theorem AP_TERM(const Term& f, const Theorem& th) const;
  Theorem AP_THM(const Theorem& th, const Term& x) const;

  // Truth and the connectives.
  Theorem TRUTH() const { return truth_; }
  Theorem EQT_INTRO(const Theorem& th) const;
  Theorem EQT_ELIM(const Theorem& th) const;
  Theorem CONJ(const Theorem& a, const Theorem& b) const;
  Theorem CONJUNCT1(const Theorem& th) const;
  Theorem CONJUNCT2(const Theorem& th) const;
  Theorem MP(const Theorem& imp, const Theorem& a) const;
  Theorem DISCH(const Term& p, const Theorem& th) const;
  Theorem UNDISCH(const Theorem& th) const;
  Theorem GEN(const Term& x, const Theorem& th) const;
  Theorem SPEC(const Term& t, const Theorem& th) const;
  Theorem PROVE_HYP(const Theorem& a, const Theorem& b) const;
  Theorem ADD_ASSUM(const Term& p, const Theorem& th) const;
  // |- p ==> F  gives  |- ~p, and back.
  Theorem NOT_INTRO(const Theorem& th) const;
  Theorem NOT_ELIM(const Theorem& th) const;
  // |- F  gives  |- p.
  Theorem CONTR(const Term& p, const Theorem& th) const;
  Theorem DISJ1(const Theorem& th, const Term& q) const;
  Theorem DISJ2(const Term& p, const Theorem& th) const;
  // |- p \/ q,  A u {p} |- r,  B u {q} |- r  gives  A u B |- r.
  Theorem DISJ_CASES(const Theorem& pq, const Theorem& pr, const Theorem& qr) const;
  Theorem EQF_INTRO(const Theorem& th) const;  // |- ~p  gives  |- p = F
  Theorem EQF_ELIM(const Theorem& th) const;   // |- p = F  gives  |- ~p

  // Conversions: each returns |- t = t'.
  Theorem BETA_CONV(const Term& t) const;
  // Reduces every redex the kernel's BETA makes progress on, skipping
  // redexes whose substitution is blocked. REFL when nothing changes.
  Theorem BETA_NORM_CONV(const Term& t) const;
  Theorem BETA_RULE(const Theorem& th) const;
  // Rewrites with equations (or |- p as p = T) left to right, to a fixed
  // point. Never enters quotations.
  Theorem REWRITE_CONV(const std::vector<Theorem>& eqs, const Term& t) const;
  Theorem REWRITE(const std::vector<Theorem>& eqs, const Theorem& th) const;
  // |- eval Q_ t _Q to ty = t for hole-free t.
  Theorem DISQUOTE_CONV(const Term& q, const Type& ty) const;
  // |- (\x. eval B to b) A = eval B' to b, where B' is the beta-normal form
  // of (\x. B) A. Antecedents are discharged with the syntax oracles.
  Theorem EVAL_REDEX_CONV(const Term& redex) const;
  // Proves a conjunction of (possibly negated) isExprType / isFreeIn atoms
  // after beta normalization, using the trusted syntax conversions.
  Theorem PROVE_SYNTAX(const Term& p) const;
  // |- a ==> b  gives  |- b, proving a with PROVE_SYNTAX.
  Theorem MP_SYNTAX(const Theorem& th) const;

  // Instantiates the type variables and then the variables of th so that
  // its conclusion's lhs-free pattern matches; used for lemmas.
  Theorem INSTANTIATE(const Theorem& th, const TypeSubst& tys, const Bindings& vs) const;

 private:
  std::optional<Theorem> beta_norm(const Term& t) const;
  std::optional<Theorem> rewrite_once(const std::vector<std::pair<Term, Theorem>>& eqs,
                                      const Term& t) const;

  Kernel& k_;
  Theorem truth_;
  Theorem and_elim1_;  // {a /\ b} |- a
  Theorem and_elim2_;  // {a /\ b} |- b
  Theorem conj_;       // {a, b} |- a /\ b
  Theorem imp_;        // |- (a ==> b) = ((a /\ b) = a)
  Theorem not_;        // |- ~a = (a ==> F)
  Theorem forall_;     // |- (!) P = (P = \x. T)
};

// Extra axioms: excluded middle (the logic has no choice operator to
// derive it from) and the freeness facts of the syntax datatypes.
void install_bootstrap(Kernel& k);

// num constants 0, SUC, +, *, <=, the full induction axiom num_INDUCTION,
// and the oracle predicates peanoSyntax and presburgerSyntax. Each is true
// of constructions representing num->bool predicates of first-order
// arithmetic; presburgerSyntax excludes *. Allowed constants are 0, SUC, +,
// *, <=, = at num and bool, the connectives, and ! and ? over num. Every
// variable, bound or free, has type num.
void install_arithmetic(Kernel& k);

// Defines class_name = \f. syntax_name f /\ (!v. ~(isFreeIn v f)) and
// returns the definition theorem.
Theorem define_arithmetic_class(Kernel& k, const std::string& class_name,
                                const std::string& syntax_name);

// Decides class_name c for closed c: |- class_name c or |- ~(class_name c).
Theorem ARITH_CLASS_CONV(const Logic& lg, const std::string& class_name, const Term& c);

}  // namespace cqe
