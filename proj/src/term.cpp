#include "cqe/term.hpp"

#include <utility>

#include "cqe/error.hpp"

namespace cqe {

struct Term::Rep {
  Kind kind;
  std::string name;
  Type annotation;  // see Term::annotation
  Type type;        // node type
  std::vector<Term> kids;
  bool eval_free;
  bool eval_free_outside_holes;
  bool stray_holes;
  bool contains_quasi;
  std::size_t size;
};

namespace {

std::string describe(const Term& t);

}  // namespace

Term Term::var(std::string name, Type ty) {
  if (name.empty()) fail(ErrorKind::RuleShape, "empty variable name");
  Type t = ty;
  return Term(std::make_shared<const Rep>(
      Rep{Kind::Var, std::move(name), std::move(ty), std::move(t), {}, true,
          true, false, false, 1}));
}

Term Term::constant(std::string name, Type ty) {
  if (name.empty()) fail(ErrorKind::RuleShape, "empty constant name");
  Type t = ty;
  return Term(std::make_shared<const Rep>(
      Rep{Kind::Const, std::move(name), std::move(ty), std::move(t), {}, true,
          true, false, false, 1}));
}

Term Term::comb(const Term& op, const Term& arg) {
  const Type& fty = op.type();
  if (!fty.is_fun())
    fail(ErrorKind::IllTyped, "operator is not a function: " + describe(op));
  if (fty.domain() != arg.type())
    fail(ErrorKind::IllTyped, "operand type " + to_string(arg.type()) +
                                  " does not match domain " +
                                  to_string(fty.domain()));
  const Rep& a = *op.rep_;
  const Rep& b = *arg.rep_;
  return Term(std::make_shared<const Rep>(Rep{
      Kind::Comb, {}, fty.codomain(), fty.codomain(), {op, arg},
      a.eval_free && b.eval_free,
      a.eval_free_outside_holes && b.eval_free_outside_holes,
      a.stray_holes || b.stray_holes, a.contains_quasi || b.contains_quasi,
      a.size + b.size + 1}));
}

Term Term::abs(const Term& binder, const Term& body) {
  if (!binder.is_var())
    fail(ErrorKind::RuleShape, "abstraction binder must be a variable");
  Type ty = fun_ty(binder.type(), body.type());
  const Rep& b = *body.rep_;
  return Term(std::make_shared<const Rep>(
      Rep{Kind::Abs, {}, ty, ty, {binder, body}, b.eval_free,
          b.eval_free_outside_holes, b.stray_holes, b.contains_quasi,
          b.size + 2}));
}

Term Term::quote(const Term& body) {
  const Rep& b = *body.rep_;
  if (!b.eval_free_outside_holes)
    fail(ErrorKind::NotEvalFree, "cannot quote a term containing an evaluation");
  if (b.contains_quasi)
    fail(ErrorKind::NestedQuasiquote,
         "a quotation body may not contain a quotation with holes");
  return Term(std::make_shared<const Rep>(
      Rep{Kind::Quote, {}, b.type, epsilon_ty(), {body}, b.eval_free, true,
          false, b.stray_holes, b.size + 1}));
}

Term Term::hole(const Term& content, Type slot) {
  const Rep& c = *content.rep_;
  if (c.type != epsilon_ty())
    fail(ErrorKind::IllTyped, "hole content must have type epsilon");
  if (c.stray_holes)
    fail(ErrorKind::HoleOutsideQuotation, "hole content contains a stray hole");
  Type t = slot;
  return Term(std::make_shared<const Rep>(
      Rep{Kind::Hole, {}, std::move(slot), std::move(t), {content},
          c.eval_free, true, true, false, c.size + 1}));
}

Term Term::eval(const Term& content, Type result) {
  const Rep& c = *content.rep_;
  if (c.type != epsilon_ty())
    fail(ErrorKind::IllTyped, "evaluation argument must have type epsilon");
  Type t = result;
  return Term(std::make_shared<const Rep>(
      Rep{Kind::Eval, {}, std::move(result), std::move(t), {content}, false,
          false, c.stray_holes, c.contains_quasi, c.size + 1}));
}

Term::Kind Term::kind() const { return rep_->kind; }
const std::string& Term::name() const { return rep_->name; }
const Type& Term::type() const { return rep_->type; }
const Type& Term::annotation() const { return rep_->annotation; }

const Term& Term::op() const {
  if (rep_->kind != Kind::Comb) fail(ErrorKind::RuleShape, "not an application");
  return rep_->kids[0];
}
const Term& Term::arg() const {
  if (rep_->kind != Kind::Comb) fail(ErrorKind::RuleShape, "not an application");
  return rep_->kids[1];
}
const Term& Term::binder() const {
  if (rep_->kind != Kind::Abs) fail(ErrorKind::RuleShape, "not an abstraction");
  return rep_->kids[0];
}
const Term& Term::body() const {
  if (rep_->kind == Kind::Abs) return rep_->kids[1];
  if (rep_->kind == Kind::Quote) return rep_->kids[0];
  fail(ErrorKind::RuleShape, "term has no body");
}
const Term& Term::content() const {
  if (rep_->kind != Kind::Hole && rep_->kind != Kind::Eval)
    fail(ErrorKind::RuleShape, "term has no content");
  return rep_->kids[0];
}

bool Term::eval_free() const { return rep_->eval_free; }
bool Term::eval_free_outside_holes() const { return rep_->eval_free_outside_holes; }
bool Term::has_stray_holes() const { return rep_->stray_holes; }
bool Term::contains_quasiquote() const { return rep_->contains_quasi; }
std::size_t Term::size() const { return rep_->size; }

bool operator==(const Term& a, const Term& b) { return compare(a, b) == 0; }

int compare(const Term& a, const Term& b) {
  if (a.rep_ == b.rep_) return 0;
  const Term::Rep& x = *a.rep_;
  const Term::Rep& y = *b.rep_;
  if (x.kind != y.kind) return x.kind < y.kind ? -1 : 1;
  if (x.size != y.size) return x.size < y.size ? -1 : 1;
  if (int c = x.name.compare(y.name); c != 0) return c < 0 ? -1 : 1;
  if (int c = compare(x.annotation, y.annotation); c != 0) return c;
  for (std::size_t i = 0; i < x.kids.size(); ++i)
    if (int c = compare(x.kids[i], y.kids[i]); c != 0) return c;
  return 0;
}

Type type_of(const Term& t) {
  if (t.has_stray_holes())
    fail(ErrorKind::HoleOutsideQuotation, "term contains a hole outside a quotation");
  return t.type();
}

bool is_eval_free(const Term& t) { return t.eval_free(); }

namespace {

std::string describe(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var: return "variable " + t.name();
    case Term::Kind::Const: return "constant " + t.name();
    case Term::Kind::Comb: return "application";
    case Term::Kind::Abs: return "abstraction";
    case Term::Kind::Quote: return "quotation";
    case Term::Kind::Hole: return "hole";
    case Term::Kind::Eval: return "evaluation";
  }
  return "term";
}

void holes_of_quote_body(const Term& t, std::vector<Term>& out) {
  switch (t.kind()) {
    case Term::Kind::Hole: out.push_back(t.content()); break;
    case Term::Kind::Comb:
      holes_of_quote_body(t.op(), out);
      holes_of_quote_body(t.arg(), out);
      break;
    case Term::Kind::Abs: holes_of_quote_body(t.body(), out); break;
    default: break;  // nested quotations are hole-free
  }
}

void frees(const Term& t, TermSet& bound, TermSet& out) {
  switch (t.kind()) {
    case Term::Kind::Var:
      if (!bound.count(t)) out.insert(t);
      break;
    case Term::Kind::Const: break;
    case Term::Kind::Comb:
      frees(t.op(), bound, out);
      frees(t.arg(), bound, out);
      break;
    case Term::Kind::Abs: {
      bool added = bound.insert(t.binder()).second;
      frees(t.body(), bound, out);
      if (added) bound.erase(t.binder());
      break;
    }
    case Term::Kind::Quote: {
      std::vector<Term> contents;
      holes_of_quote_body(t.body(), contents);
      for (const auto& c : contents) frees(c, bound, out);
      break;
    }
    case Term::Kind::Hole: frees(t.content(), bound, out); break;
    case Term::Kind::Eval:
      fail(ErrorKind::NotEvalFree, "free variables of a term with an evaluation");
  }
}

}  // namespace

TermSet free_variables(const Term& t) {
  if (!t.eval_free())
    fail(ErrorKind::NotEvalFree, "free variables of a term with an evaluation");
  TermSet bound, out;
  frees(t, bound, out);
  return out;
}

bool is_free_in(const Term& var, const Term& t) {
  return free_variables(t).count(var) > 0;
}

namespace {

void all_vars(const Term& t, TermSet& out) {
  switch (t.kind()) {
    case Term::Kind::Var: out.insert(t); break;
    case Term::Kind::Const: break;
    case Term::Kind::Comb:
      all_vars(t.op(), out);
      all_vars(t.arg(), out);
      break;
    case Term::Kind::Abs:
      out.insert(t.binder());
      all_vars(t.body(), out);
      break;
    case Term::Kind::Quote: all_vars(t.body(), out); break;
    case Term::Kind::Hole:
    case Term::Kind::Eval: all_vars(t.content(), out); break;
  }
}

using AlphaEnv = std::vector<std::pair<Term, Term>>;

bool aeq(const Term& s, const Term& t, AlphaEnv& env);

// Inside a quotation body: literal comparison, except hole contents which
// belong to the enclosing scope.
bool aeq_literal(const Term& s, const Term& t, AlphaEnv& outer) {
  if (s.kind() != t.kind()) return false;
  switch (s.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Const:
    case Term::Kind::Eval: return s == t;
    case Term::Kind::Comb:
      return aeq_literal(s.op(), t.op(), outer) && aeq_literal(s.arg(), t.arg(), outer);
    case Term::Kind::Abs:
      return s.binder() == t.binder() && aeq_literal(s.body(), t.body(), outer);
    case Term::Kind::Quote: return aeq_literal(s.body(), t.body(), outer);
    case Term::Kind::Hole:
      return s.annotation() == t.annotation() && aeq(s.content(), t.content(), outer);
  }
  return false;
}

bool aeq(const Term& s, const Term& t, AlphaEnv& env) {
  if (env.empty() && s.identity() == t.identity()) return true;
  if (s.kind() != t.kind()) return false;
  switch (s.kind()) {
    case Term::Kind::Var:
      for (auto it = env.rbegin(); it != env.rend(); ++it) {
        bool l = it->first == s;
        bool r = it->second == t;
        if (l || r) return l && r;
      }
      return s == t;
    case Term::Kind::Const: return s == t;
    case Term::Kind::Comb: return aeq(s.op(), t.op(), env) && aeq(s.arg(), t.arg(), env);
    case Term::Kind::Abs: {
      if (s.binder().type() != t.binder().type()) return false;
      env.emplace_back(s.binder(), t.binder());
      bool r = aeq(s.body(), t.body(), env);
      env.pop_back();
      return r;
    }
    case Term::Kind::Quote: return aeq_literal(s.body(), t.body(), env);
    case Term::Kind::Hole:
    case Term::Kind::Eval:
      return s.annotation() == t.annotation() && aeq(s.content(), t.content(), env);
  }
  return false;
}

}  // namespace

TermSet all_variables(const Term& t) {
  TermSet out;
  all_vars(t, out);
  return out;
}

bool alpha_equivalent(const Term& s, const Term& t) {
  AlphaEnv env;
  return aeq(s, t, env);
}

Term fresh_variant(const Term& x, const TermSet& avoid) {
  if (!x.is_var()) fail(ErrorKind::NotAVariable, "fresh_variant needs a variable");
  auto taken = [&](const std::string& n) {
    for (const auto& v : avoid)
      if (v.is_var() && v.name() == n) return true;
    return false;
  };
  std::string name = x.name();
  while (taken(name)) name += '\'';
  return name == x.name() ? x : Term::var(name, x.type());
}

std::string encode_literal(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::optional<std::string> decode_literal(std::string_view name) {
  if (name.size() < 2 || name.front() != '"' || name.back() != '"') return std::nullopt;
  std::string out;
  for (std::size_t i = 1; i + 1 < name.size(); ++i) {
    char c = name[i];
    if (c == '"') return std::nullopt;
    if (c == '\\') {
      if (i + 2 >= name.size()) return std::nullopt;
      c = name[++i];
      if (c != '"' && c != '\\') return std::nullopt;
    }
    out += c;
  }
  return out;
}

Term string_literal(std::string_view text) {
  return Term::constant(encode_literal(text), str_ty());
}

bool is_string_literal(const Term& t) {
  return t.is_const() && t.type() == str_ty() && decode_literal(t.name()).has_value();
}

std::optional<std::string> literal_value(const Term& t) {
  if (!t.is_const() || t.type() != str_ty()) return std::nullopt;
  return decode_literal(t.name());
}

Term mk_eq(const Term& lhs, const Term& rhs) {
  Type a = lhs.type();
  Term eq = Term::constant("=", fun_ty(a, fun_ty(a, bool_ty())));
  return Term::comb(Term::comb(eq, lhs), rhs);
}

Term mk_binop(const std::string& op, const Term& lhs, const Term& rhs) {
  Term c = Term::constant(op, fun_ty(bool_ty(), fun_ty(bool_ty(), bool_ty())));
  return Term::comb(Term::comb(c, lhs), rhs);
}

Term list_comb(Term op, const std::vector<Term>& args) {
  for (const auto& a : args) op = Term::comb(op, a);
  return op;
}

std::pair<Term, std::vector<Term>> strip_comb(const Term& t) {
  std::vector<Term> args;
  Term head = t;
  while (head.is_comb()) {
    args.push_back(head.arg());
    head = Term(head.op());
  }
  return {head, std::vector<Term>(args.rbegin(), args.rend())};
}

bool is_eq(const Term& t) {
  return t.is_comb() && t.op().is_comb() && t.op().op().is_const() &&
         t.op().op().name() == "=";
}

const Term& eq_lhs(const Term& t) {
  if (!is_eq(t)) fail(ErrorKind::RuleShape, "not an equation");
  return t.op().arg();
}

const Term& eq_rhs(const Term& t) {
  if (!is_eq(t)) fail(ErrorKind::RuleShape, "not an equation");
  return t.arg();
}

}  // namespace cqe
