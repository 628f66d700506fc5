#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cqe/types.hpp"

namespace cqe {

// Expression tree with seven node kinds. Terms are immutable; the factory
// functions enforce the formation rules so every Term value is well-formed
// up to stray holes (holes not enclosed by a quotation), which are tracked
// and rejected by type_of and by the kernel.
class Term {
 public:
  enum class Kind : std::uint8_t { Var, Const, Comb, Abs, Quote, Hole, Eval };

  static Term var(std::string name, Type ty);
  static Term constant(std::string name, Type ty);
  // Throws IllTyped unless op has a function type whose domain is arg's type.
  static Term comb(const Term& op, const Term& arg);
  // Throws RuleShape unless binder is a variable.
  static Term abs(const Term& binder, const Term& body);
  // Throws NotEvalFree if body has an Evaluation outside hole contents and
  // NestedQuasiquote if body contains a quotation that itself has holes.
  static Term quote(const Term& body);
  // content must have type epsilon; slot is the type the hole stands for.
  static Term hole(const Term& content, Type slot);
  // content must have type epsilon.
  static Term eval(const Term& content, Type result);

  Kind kind() const;
  bool is_var() const { return kind() == Kind::Var; }
  bool is_const() const { return kind() == Kind::Const; }
  bool is_comb() const { return kind() == Kind::Comb; }
  bool is_abs() const { return kind() == Kind::Abs; }
  bool is_quote() const { return kind() == Kind::Quote; }
  bool is_hole() const { return kind() == Kind::Hole; }
  bool is_eval() const { return kind() == Kind::Eval; }

  // Var / Const name.
  const std::string& name() const;
  // Node type as assigned by the formation rules (Quote -> epsilon,
  // Hole -> its slot type). Does not reject stray holes; see type_of.
  const Type& type() const;
  // Quote: body type. Hole: slot type. Eval: result type. Var/Const: type.
  const Type& annotation() const;

  const Term& op() const;       // Comb
  const Term& arg() const;      // Comb
  const Term& binder() const;   // Abs
  const Term& body() const;     // Abs, Quote
  const Term& content() const;  // Hole, Eval

  bool eval_free() const;          // no Evaluation at any depth
  bool eval_free_outside_holes() const;
  bool has_stray_holes() const;    // holes not enclosed by a quotation
  bool contains_quasiquote() const;
  std::size_t size() const;

  const void* identity() const { return rep_.get(); }

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
  friend int compare(const Term& a, const Term& b);
  friend bool operator<(const Term& a, const Term& b) { return compare(a, b) < 0; }

 private:
  struct Rep;
  explicit Term(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

using TermSet = std::set<Term>;

// Type of a well-formed term. Throws HoleOutsideQuotation for stray holes.
Type type_of(const Term& t);

bool is_eval_free(const Term& t);

// Free variables of an eval-free term. A quotation contributes only the
// free variables of its hole contents. Throws NotEvalFree.
TermSet free_variables(const Term& t);
bool is_free_in(const Term& var, const Term& t);

// Variables occurring anywhere in t (free, bound, or quoted), by name+type.
TermSet all_variables(const Term& t);

// Alpha-equivalence. Quotation bodies are compared literally except for
// hole contents, which are compared in the enclosing binder context.
bool alpha_equivalent(const Term& s, const Term& t);

// Prime x's name until it is not the name of any variable in `avoid`.
Term fresh_variant(const Term& x, const TermSet& avoid);

// String literals embed names into constructions as constants of type str.
Term string_literal(std::string_view text);
bool is_string_literal(const Term& t);
std::optional<std::string> literal_value(const Term& t);
std::string encode_literal(std::string_view text);
std::optional<std::string> decode_literal(std::string_view name);

// Convenience builders.
Term mk_eq(const Term& lhs, const Term& rhs);
Term mk_binop(const std::string& op, const Term& lhs, const Term& rhs);
Term list_comb(Term op, const std::vector<Term>& args);
std::pair<Term, std::vector<Term>> strip_comb(const Term& t);
bool is_eq(const Term& t);
const Term& eq_lhs(const Term& t);
const Term& eq_rhs(const Term& t);

}  // namespace cqe
