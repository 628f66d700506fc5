#pragma once

#include <string>
#include <string_view>

#include "cqe/signature.hpp"
#include "cqe/term.hpp"

namespace cqe {

// Concrete syntax.
//
//   type  ::= 'A | name | type name | (type, ..., type) name | type -> type
//   term  ::= \x. t | !x. t | ?x. t          binders; x or x:ty, or (x:ty) ...
//           | t ==> t | t \/ t | t /\ t | ~t | t = t | t <= t | t + t | t * t
//           | t t | name | name:ty | "literal" | (t) | (t : ty) | (op) | (op : ty)
//           | Q_ t _Q | H_ t _H | eval t to ty
//
// Names resolve to the innermost binder, then to a signature constant, then
// to a free variable. Hole contents see the binders outside the enclosing
// quotation only.
Type parse_type(std::string_view src, const Signature& sig);
Term parse_term(std::string_view src, const Signature& sig);

// Prints a term so that parse_term gives back the same term: variables and
// polymorphic constants carry type annotations.
std::string print_term(const Term& t, const Signature& sig);
std::string print_type(const Type& ty);

// Compact display form without annotations, for messages and traces.
std::string show_term(const Term& t);

}  // namespace cqe
