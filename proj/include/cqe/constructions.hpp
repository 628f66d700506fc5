#pragma once

#include <optional>

#include "cqe/signature.hpp"
#include "cqe/term.hpp"

namespace cqe {

// Constructor constants of the `type` and `epsilon` syntax datatypes.
namespace ctor {
inline constexpr const char* kQuoVar = "QuoVar";
inline constexpr const char* kQuoConst = "QuoConst";
inline constexpr const char* kApp = "App";
inline constexpr const char* kAbs = "Abs";
inline constexpr const char* kQuo = "Quo";
inline constexpr const char* kTyVar = "TyVar";
inline constexpr const char* kTyBase = "TyBase";
inline constexpr const char* kTyMonoCons = "TyMonoCons";
inline constexpr const char* kTyBiCons = "TyBiCons";

Term quo_var();
Term quo_const();
Term app();
Term abs();
Term quo();
Term ty_var();
Term ty_base();
Term ty_mono_cons();
Term ty_bi_cons();
}  // namespace ctor

void register_construction_constants(Signature& sig);

// Syntax value of a type. Throws UnsupportedArity for arity >= 3.
Term type_to_construction(const Type& ty);
// Inverse of type_to_construction on closed constructor terms. With a
// signature, constructor names and arities are checked. Throws Improper or
// NotAConstruction.
Type construction_to_type(const Term& tyc, const Signature* sig = nullptr);

// The E mapping. Throws NotEvalFree / ContainsHole.
Term term_to_construction(const Term& t);
// Partial inverse of E on canonical constructor terms.
// Throws NotAConstruction (not built from constructors and literals) or
// Improper (does not represent a well-typed term).
Term construction_to_term(const Term& c, const Signature* sig = nullptr);

bool is_proper(const Term& c, const Signature* sig = nullptr);
bool is_expr_type_meta(const Term& c, const Term& tyc, const Signature* sig = nullptr);
// Throws NotAVariable if xc is not QuoVar-headed, Improper if bc is improper.
bool is_free_in_meta(const Term& xc, const Term& bc, const Signature* sig = nullptr);

// Expands a (quasi)quotation into constructor form, splicing hole
// contents verbatim.
Term expand_quasiquote(const Term& q);

// Reduces a closed term of type epsilon, type, or str that is built from
// constructors, literals, and quotations (with closed hole contents) to
// canonical constructor form. Returns nullopt for anything else.
std::optional<Term> normalize_construction(const Term& t);

}  // namespace cqe
