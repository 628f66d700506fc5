#include "cqe/signature.hpp"

#include "cqe/error.hpp"

namespace cqe {

Signature::Signature() {
  for (const char* name : {"bool", "ind", "epsilon", "type", "num", "str"}) add_type(name, 0);
  add_type("fun", 2);
  Type a = Type::var("A");
  add_constant("=", fun_ty(a, fun_ty(a, bool_ty())));
}

void Signature::add_type(const std::string& name, int arity) {
  if (arity < 0) fail(ErrorKind::TypeArgMalformed, "negative arity for " + name);
  if (!types_.emplace(name, arity).second)
    fail(ErrorKind::DuplicateName, "type constructor " + name + " already defined");
  type_order_.push_back(name);
}

void Signature::add_constant(const std::string& name, const Type& generic) {
  if (decode_literal(name))
    fail(ErrorKind::DuplicateName, "string literal names are reserved: " + name);
  check_type(generic);
  if (!constants_.emplace(name, generic).second)
    fail(ErrorKind::DuplicateName, "constant " + name + " already defined");
  constant_order_.push_back(name);
}

std::optional<int> Signature::arity(const std::string& name) const {
  auto it = types_.find(name);
  if (it == types_.end()) return std::nullopt;
  return it->second;
}

std::optional<Type> Signature::constant_type(const std::string& name) const {
  auto it = constants_.find(name);
  if (it == constants_.end()) return std::nullopt;
  return it->second;
}

bool Signature::has_constant(const std::string& name) const {
  return constants_.count(name) > 0;
}

void Signature::check_type(const Type& ty) const {
  if (ty.is_var()) return;
  auto it = types_.find(ty.name());
  if (it == types_.end()) fail(ErrorKind::UnknownType, "unknown type constructor " + ty.name());
  if (static_cast<std::size_t>(it->second) != ty.args().size())
    fail(ErrorKind::TypeMismatch, "type constructor " + ty.name() + " has arity " +
                                      std::to_string(it->second));
  for (const auto& a : ty.args()) check_type(a);
}

bool Signature::is_instance(const std::string& constant, const Type& ty) const {
  auto it = constants_.find(constant);
  if (it == constants_.end()) return false;
  TypeSubst theta;
  return match_type(it->second, ty, theta);
}

void Signature::check_term(const Term& t) const {
  if (t.has_stray_holes())
    fail(ErrorKind::HoleOutsideQuotation, "term contains a hole outside a quotation");
  switch (t.kind()) {
    case Term::Kind::Var: check_type(t.type()); break;
    case Term::Kind::Const:
      if (decode_literal(t.name())) {
        if (t.type() != str_ty())
          fail(ErrorKind::TypeMismatch, "string literal " + t.name() + " must have type str");
        break;
      }
      if (!has_constant(t.name())) fail(ErrorKind::UnknownConstant, "unknown constant " + t.name());
      if (!is_instance(t.name(), t.type()))
        fail(ErrorKind::TypeMismatch, "constant " + t.name() + " used at type " +
                                          to_string(t.type()));
      break;
    case Term::Kind::Comb:
      check_term(t.op());
      check_term(t.arg());
      break;
    case Term::Kind::Abs:
      check_term(t.binder());
      check_term(t.body());
      break;
    case Term::Kind::Quote: {
      // Holes inside are legal here; check the body piecewise.
      struct Walk {
        const Signature& sig;
        void operator()(const Term& u) const {
          switch (u.kind()) {
            case Term::Kind::Hole:
              sig.check_type(u.annotation());
              sig.check_term(u.content());
              break;
            case Term::Kind::Comb:
              (*this)(u.op());
              (*this)(u.arg());
              break;
            case Term::Kind::Abs:
              (*this)(u.binder());
              (*this)(u.body());
              break;
            default: sig.check_term(u); break;
          }
        }
      };
      Walk{*this}(t.body());
      break;
    }
    case Term::Kind::Hole: break;  // unreachable: stray holes rejected above
    case Term::Kind::Eval:
      check_type(t.annotation());
      check_term(t.content());
      break;
  }
}

}  // namespace cqe
