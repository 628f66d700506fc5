#include "cqe/types.hpp"

#include "cqe/error.hpp"

namespace cqe {

struct Type::Rep {
  bool is_var;
  std::string name;
  std::vector<Type> args;
};

Type Type::var(std::string name) {
  return Type(std::make_shared<const Rep>(Rep{true, std::move(name), {}}));
}

Type Type::app(std::string constructor, std::vector<Type> args) {
  return Type(std::make_shared<const Rep>(
      Rep{false, std::move(constructor), std::move(args)}));
}

bool Type::is_var() const { return rep_->is_var; }
const std::string& Type::name() const { return rep_->name; }
const std::vector<Type>& Type::args() const { return rep_->args; }

bool Type::is_fun() const {
  return !rep_->is_var && rep_->name == "fun" && rep_->args.size() == 2;
}

const Type& Type::domain() const {
  if (!is_fun()) fail(ErrorKind::IllTyped, "not a function type: " + to_string(*this));
  return rep_->args[0];
}

const Type& Type::codomain() const {
  if (!is_fun()) fail(ErrorKind::IllTyped, "not a function type: " + to_string(*this));
  return rep_->args[1];
}

bool operator==(const Type& a, const Type& b) { return compare(a, b) == 0; }

int compare(const Type& a, const Type& b) {
  if (a.rep_ == b.rep_) return 0;
  if (a.is_var() != b.is_var()) return a.is_var() ? -1 : 1;
  if (int c = a.name().compare(b.name()); c != 0) return c < 0 ? -1 : 1;
  const auto& xs = a.args();
  const auto& ys = b.args();
  if (xs.size() != ys.size()) return xs.size() < ys.size() ? -1 : 1;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (int c = compare(xs[i], ys[i]); c != 0) return c;
  return 0;
}

Type bool_ty() { static const Type t = Type::app("bool"); return t; }
Type ind_ty() { static const Type t = Type::app("ind"); return t; }
Type epsilon_ty() { static const Type t = Type::app("epsilon"); return t; }
Type type_ty() { static const Type t = Type::app("type"); return t; }
Type num_ty() { static const Type t = Type::app("num"); return t; }
Type str_ty() { static const Type t = Type::app("str"); return t; }
Type fun_ty(Type dom, Type cod) {
  return Type::app("fun", {std::move(dom), std::move(cod)});
}

Type type_subst(const TypeSubst& theta, const Type& ty) {
  if (theta.empty()) return ty;
  if (ty.is_var()) {
    auto it = theta.find(ty.name());
    return it == theta.end() ? ty : it->second;
  }
  if (ty.args().empty()) return ty;
  std::vector<Type> args;
  args.reserve(ty.args().size());
  bool changed = false;
  for (const auto& a : ty.args()) {
    args.push_back(type_subst(theta, a));
    changed = changed || args.back() != a;
  }
  return changed ? Type::app(ty.name(), std::move(args)) : ty;
}

bool type_has_vars(const Type& ty) {
  if (ty.is_var()) return true;
  for (const auto& a : ty.args())
    if (type_has_vars(a)) return true;
  return false;
}

void collect_type_vars(const Type& ty, std::vector<std::string>& out) {
  if (ty.is_var()) {
    for (const auto& n : out)
      if (n == ty.name()) return;
    out.push_back(ty.name());
    return;
  }
  for (const auto& a : ty.args()) collect_type_vars(a, out);
}

bool match_type(const Type& pattern, const Type& ty, TypeSubst& theta) {
  if (pattern.is_var()) {
    auto [it, inserted] = theta.emplace(pattern.name(), ty);
    return inserted || it->second == ty;
  }
  if (ty.is_var() || pattern.name() != ty.name() ||
      pattern.args().size() != ty.args().size())
    return false;
  for (std::size_t i = 0; i < ty.args().size(); ++i)
    if (!match_type(pattern.args()[i], ty.args()[i], theta)) return false;
  return true;
}

namespace {

void print_type(const Type& ty, std::string& out, bool in_domain) {
  if (ty.is_var()) {
    out += '\'';
    out += ty.name();
    return;
  }
  if (ty.is_fun()) {
    if (in_domain) out += '(';
    print_type(ty.domain(), out, true);
    out += "->";
    print_type(ty.codomain(), out, false);
    if (in_domain) out += ')';
    return;
  }
  if (!ty.args().empty()) {
    // Postfix constructor application, HOL style: (a,b)tc or a tc.
    out += '(';
    for (std::size_t i = 0; i < ty.args().size(); ++i) {
      if (i) out += ',';
      print_type(ty.args()[i], out, false);
    }
    out += ')';
  }
  out += ty.name();
}

}  // namespace

std::string to_string(const Type& ty) {
  std::string out;
  print_type(ty, out, false);
  return out;
}

}  // namespace cqe
