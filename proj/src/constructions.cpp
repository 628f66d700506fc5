#include "cqe/constructions.hpp"

#include <cstring>

#include "cqe/error.hpp"

namespace cqe {

namespace ctor {
namespace {
Type ee() { return fun_ty(epsilon_ty(), epsilon_ty()); }
Type eee() { return fun_ty(epsilon_ty(), ee()); }
Type name_ty_eps() { return fun_ty(str_ty(), fun_ty(type_ty(), epsilon_ty())); }
}  // namespace

Term quo_var() { static const Term t = Term::constant(kQuoVar, name_ty_eps()); return t; }
Term quo_const() { static const Term t = Term::constant(kQuoConst, name_ty_eps()); return t; }
Term app() { static const Term t = Term::constant(kApp, eee()); return t; }
Term abs() { static const Term t = Term::constant(kAbs, eee()); return t; }
Term quo() { static const Term t = Term::constant(kQuo, ee()); return t; }
Term ty_var() { static const Term t = Term::constant(kTyVar, fun_ty(str_ty(), type_ty())); return t; }
Term ty_base() { static const Term t = Term::constant(kTyBase, fun_ty(str_ty(), type_ty())); return t; }
Term ty_mono_cons() {
  static const Term t =
      Term::constant(kTyMonoCons, fun_ty(str_ty(), fun_ty(type_ty(), type_ty())));
  return t;
}
Term ty_bi_cons() {
  static const Term t = Term::constant(
      kTyBiCons, fun_ty(str_ty(), fun_ty(type_ty(), fun_ty(type_ty(), type_ty()))));
  return t;
}
}  // namespace ctor

void register_construction_constants(Signature& sig) {
  for (const Term& c : {ctor::ty_var(), ctor::ty_base(), ctor::ty_mono_cons(),
                        ctor::ty_bi_cons(), ctor::quo_var(), ctor::quo_const(),
                        ctor::app(), ctor::abs(), ctor::quo()})
    sig.add_constant(c.name(), c.type());
}

namespace {

// Head constant name and arguments of a fully applied constructor term.
bool dest_ctor(const Term& t, const Term& ctor_const, std::vector<Term>& args) {
  auto [head, xs] = strip_comb(t);
  if (head != ctor_const) return false;
  std::size_t n = 0;
  for (Type ty = ctor_const.type(); ty.is_fun(); ty = ty.codomain()) ++n;
  if (xs.size() != n) return false;
  args = std::move(xs);
  return true;
}

std::string need_literal(const Term& t) {
  auto v = literal_value(t);
  if (!v) fail(ErrorKind::NotAConstruction, "expected a string literal");
  return *v;
}

}  // namespace

Term type_to_construction(const Type& ty) {
  if (ty.is_var()) return Term::comb(ctor::ty_var(), string_literal(ty.name()));
  const auto& args = ty.args();
  Term name = string_literal(ty.name());
  switch (args.size()) {
    case 0: return Term::comb(ctor::ty_base(), name);
    case 1: return list_comb(ctor::ty_mono_cons(), {name, type_to_construction(args[0])});
    case 2:
      return list_comb(ctor::ty_bi_cons(),
                       {name, type_to_construction(args[0]), type_to_construction(args[1])});
    default:
      fail(ErrorKind::UnsupportedArity,
           "type constructor " + ty.name() + " has arity " + std::to_string(args.size()));
  }
}

Type construction_to_type(const Term& tyc, const Signature* sig) {
  std::vector<Term> a;
  auto checked = [&](const std::string& name, std::vector<Type> args) {
    if (name.empty()) fail(ErrorKind::Improper, "empty type constructor name");
    if (sig) {
      auto ar = sig->arity(name);
      if (!ar || static_cast<std::size_t>(*ar) != args.size())
        fail(ErrorKind::Improper, "no type constructor " + name + "/" +
                                      std::to_string(args.size()));
    }
    return Type::app(name, std::move(args));
  };
  if (dest_ctor(tyc, ctor::ty_var(), a)) {
    std::string n = need_literal(a[0]);
    if (n.empty()) fail(ErrorKind::Improper, "empty type variable name");
    return Type::var(n);
  }
  if (dest_ctor(tyc, ctor::ty_base(), a)) return checked(need_literal(a[0]), {});
  if (dest_ctor(tyc, ctor::ty_mono_cons(), a))
    return checked(need_literal(a[0]), {construction_to_type(a[1], sig)});
  if (dest_ctor(tyc, ctor::ty_bi_cons(), a))
    return checked(need_literal(a[0]),
                   {construction_to_type(a[1], sig), construction_to_type(a[2], sig)});
  fail(ErrorKind::NotAConstruction, "not a type construction");
}

Term term_to_construction(const Term& t) {
  if (!t.eval_free()) fail(ErrorKind::NotEvalFree, "E is defined on eval-free terms only");
  switch (t.kind()) {
    case Term::Kind::Var:
      return list_comb(ctor::quo_var(), {string_literal(t.name()), type_to_construction(t.type())});
    case Term::Kind::Const:
      return list_comb(ctor::quo_const(),
                       {string_literal(t.name()), type_to_construction(t.type())});
    case Term::Kind::Comb:
      return list_comb(ctor::app(), {term_to_construction(t.op()), term_to_construction(t.arg())});
    case Term::Kind::Abs:
      return list_comb(ctor::abs(),
                       {term_to_construction(t.binder()), term_to_construction(t.body())});
    case Term::Kind::Quote: return Term::comb(ctor::quo(), term_to_construction(t.body()));
    case Term::Kind::Hole: fail(ErrorKind::ContainsHole, "E is undefined on holes");
    case Term::Kind::Eval: break;
  }
  fail(ErrorKind::NotEvalFree, "E is defined on eval-free terms only");
}

Term construction_to_term(const Term& c, const Signature* sig) {
  std::vector<Term> a;
  auto atom_type = [&](const Term& tyc) {
    try {
      return construction_to_type(tyc, sig);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NotAConstruction) throw;
      fail(ErrorKind::Improper, e.what());
    }
  };
  if (dest_ctor(c, ctor::quo_var(), a)) {
    std::string n = need_literal(a[0]);
    if (n.empty()) fail(ErrorKind::Improper, "empty variable name");
    return Term::var(n, atom_type(a[1]));
  }
  if (dest_ctor(c, ctor::quo_const(), a)) {
    std::string n = need_literal(a[0]);
    Type ty = atom_type(a[1]);
    if (n.empty()) fail(ErrorKind::Improper, "empty constant name");
    if (sig) {
      bool ok = decode_literal(n) ? ty == str_ty() : sig->is_instance(n, ty);
      if (!ok) fail(ErrorKind::Improper, "no constant " + n + " of type " + to_string(ty));
    }
    return Term::constant(n, ty);
  }
  if (dest_ctor(c, ctor::app(), a)) {
    Term f = construction_to_term(a[0], sig);
    Term x = construction_to_term(a[1], sig);
    try {
      return Term::comb(f, x);
    } catch (const Error& e) {
      fail(ErrorKind::Improper, e.what());
    }
  }
  if (dest_ctor(c, ctor::abs(), a)) {
    Term v = construction_to_term(a[0], sig);
    Term b = construction_to_term(a[1], sig);
    if (!v.is_var()) fail(ErrorKind::Improper, "abstraction over a non-variable");
    return Term::abs(v, b);
  }
  if (dest_ctor(c, ctor::quo(), a)) return Term::quote(construction_to_term(a[0], sig));
  fail(ErrorKind::NotAConstruction, "not a construction");
}

bool is_proper(const Term& c, const Signature* sig) {
  try {
    construction_to_term(c, sig);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotAConstruction) throw;
    return false;
  }
}

bool is_expr_type_meta(const Term& c, const Term& tyc, const Signature* sig) {
  try {
    Term t = construction_to_term(c, sig);
    return construction_to_type(tyc, sig) == t.type();
  } catch (const Error&) {
    return false;
  }
}

bool is_free_in_meta(const Term& xc, const Term& bc, const Signature* sig) {
  std::vector<Term> a;
  if (!dest_ctor(xc, ctor::quo_var(), a))
    fail(ErrorKind::NotAVariable, "first argument must be a QuoVar construction");
  Term x = construction_to_term(xc, sig);
  Term b = construction_to_term(bc, sig);
  return is_free_in(x, b);
}

namespace {

Term expand_body(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Const: return term_to_construction(t);
    case Term::Kind::Comb: return list_comb(ctor::app(), {expand_body(t.op()), expand_body(t.arg())});
    case Term::Kind::Abs:
      return list_comb(ctor::abs(), {term_to_construction(t.binder()), expand_body(t.body())});
    case Term::Kind::Quote: return Term::comb(ctor::quo(), term_to_construction(t.body()));
    case Term::Kind::Hole: return t.content();
    case Term::Kind::Eval: break;
  }
  fail(ErrorKind::NotEvalFree, "quotation body contains an evaluation outside holes");
}

bool is_ctor_head(const Term& h) {
  for (const Term& c : {ctor::ty_var(), ctor::ty_base(), ctor::ty_mono_cons(),
                        ctor::ty_bi_cons(), ctor::quo_var(), ctor::quo_const(),
                        ctor::app(), ctor::abs(), ctor::quo()})
    if (h == c) return true;
  return false;
}

}  // namespace

Term expand_quasiquote(const Term& q) {
  if (!q.is_quote()) fail(ErrorKind::RuleShape, "expand_quasiquote expects a quotation");
  return expand_body(q.body());
}

std::optional<Term> normalize_construction(const Term& t) {
  if (is_string_literal(t)) return t;
  if (t.is_quote()) {
    if (!t.contains_quasiquote()) return term_to_construction(t.body());
    return normalize_construction(expand_quasiquote(t));
  }
  auto [head, args] = strip_comb(t);
  if (!is_ctor_head(head)) return std::nullopt;
  std::size_t n = 0;
  for (Type ty = head.type(); ty.is_fun(); ty = ty.codomain()) ++n;
  if (args.size() != n) return std::nullopt;
  std::vector<Term> out;
  out.reserve(n);
  for (const auto& a : args) {
    auto na = normalize_construction(a);
    if (!na) return std::nullopt;
    out.push_back(*na);
  }
  return list_comb(head, out);
}

}  // namespace cqe
