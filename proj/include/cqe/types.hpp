#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace cqe {

// Simple types: type variables ('A) and applied type constructors.
// Values are immutable and cheap to copy.
class Type {
 public:
  static Type var(std::string name);
  static Type app(std::string constructor, std::vector<Type> args = {});

  bool is_var() const;
  bool is_app() const { return !is_var(); }
  const std::string& name() const;
  const std::vector<Type>& args() const;

  bool is_fun() const;
  // Domain and codomain of a "fun" type. Throws on non-function types.
  const Type& domain() const;
  const Type& codomain() const;

  friend bool operator==(const Type& a, const Type& b);
  friend bool operator!=(const Type& a, const Type& b) { return !(a == b); }
  friend int compare(const Type& a, const Type& b);
  friend bool operator<(const Type& a, const Type& b) { return compare(a, b) < 0; }

 private:
  struct Rep;
  explicit Type(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

using TypeSubst = std::map<std::string, Type>;

Type bool_ty();
Type ind_ty();
Type epsilon_ty();
Type type_ty();
Type num_ty();
Type str_ty();
Type fun_ty(Type dom, Type cod);

Type type_subst(const TypeSubst& theta, const Type& ty);
bool type_has_vars(const Type& ty);
void collect_type_vars(const Type& ty, std::vector<std::string>& out);

// One-way matching: extends `theta` so that type_subst(theta, pattern) == ty.
bool match_type(const Type& pattern, const Type& ty, TypeSubst& theta);

std::string to_string(const Type& ty);

}  // namespace cqe
