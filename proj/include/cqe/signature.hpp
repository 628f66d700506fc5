#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cqe/term.hpp"
#include "cqe/types.hpp"

namespace cqe {

// Session table of type constructors (name -> arity) and constants
// (name -> generic type). Append-only: redefining a name is an error.
class Signature {
 public:
  // Base table: bool/0, ind/0, epsilon/0, type/0, num/0, str/0, fun/2 and
  // the polymorphic equality constant.
  Signature();

  void add_type(const std::string& name, int arity);
  void add_constant(const std::string& name, const Type& generic);

  std::optional<int> arity(const std::string& name) const;
  std::optional<Type> constant_type(const std::string& name) const;
  bool has_constant(const std::string& name) const;

  // Throws UnknownType / TypeMismatch if ty mentions an unregistered
  // constructor or one applied at the wrong arity.
  void check_type(const Type& ty) const;
  // Checks every type and every constant occurrence (constants must be
  // instances of their generic type; string literals must have type str)
  // and rejects stray holes.
  void check_term(const Term& t) const;
  bool is_instance(const std::string& constant, const Type& ty) const;

  const std::vector<std::string>& constant_order() const { return constant_order_; }
  const std::vector<std::string>& type_order() const { return type_order_; }

 private:
  std::map<std::string, int> types_;
  std::map<std::string, Type> constants_;
  std::vector<std::string> type_order_;
  std::vector<std::string> constant_order_;
};

}  // namespace cqe
