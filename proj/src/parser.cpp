#include <cctype>
#include <map>

#include "cqe/error.hpp"
#include "cqe/frontend.hpp"

namespace cqe {

namespace {

enum class Tok { Ident, Sym, Str, TyVar, LParen, RParen, Dot, Comma, Colon, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

const char* const kSymbols[] = {"==>", "\\/", "/\\", "<=", "->", "=", "~", "+", "*", "!", "?", "\\"};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto err = [&](const std::string& m) {
    fail(ErrorKind::ParseError, m + " at offset " + std::to_string(i));
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (c == '(') { out.push_back({Tok::LParen, "(", i++}); continue; }
    if (c == ')') { out.push_back({Tok::RParen, ")", i++}); continue; }
    if (c == '.') { out.push_back({Tok::Dot, ".", i++}); continue; }
    if (c == ',') { out.push_back({Tok::Comma, ",", i++}); continue; }
    if (c == ':') { out.push_back({Tok::Colon, ":", i++}); continue; }
    if (c == '"') {
      ++i;
      while (i < s.size() && s[i] != '"') {
        if (s[i] == '\\') ++i;
        ++i;
      }
      if (i >= s.size()) err("unterminated string literal");
      ++i;
      out.push_back({Tok::Str, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (c == '\'') {
      ++i;
      while (i < s.size() && ident_char(s[i])) ++i;
      if (i == start + 1) err("empty type variable");
      out.push_back({Tok::TyVar, std::string(s.substr(start + 1, i - start - 1)), start});
      continue;
    }
    if (ident_char(c)) {
      while (i < s.size() && ident_char(s[i])) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    bool matched = false;
    for (const char* sym : kSymbols) {
      std::string_view v(sym);
      if (s.substr(i, v.size()) == v) {
        out.push_back({Tok::Sym, std::string(v), i});
        i += v.size();
        matched = true;
        break;
      }
    }
    if (!matched) err(std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

bool is_keyword(const std::string& s) {
  return s == "eval" || s == "to" || s == "Q_" || s == "_Q" || s == "H_" || s == "_H";
}

// Preterm: a term whose types may contain metavariables ('?n').
struct Pre {
  Term::Kind kind;
  std::string name;
  Type ty;
  std::vector<Pre> kids;
};

class Parser {
 public:
  Parser(std::string_view src, const Signature& sig) : toks_(lex(src)), sig_(sig) {}

  Type type_only() {
    Type t = type();
    expect_end();
    return t;
  }

  Term term_only() {
    Pre p = term();
    expect_end();
    return build(p);
  }

 private:
  // --- tokens --------------------------------------------------------------
  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  bool at_sym(const char* s) const { return peek().kind == Tok::Sym && peek().text == s; }
  bool at_ident(const char* s) const { return peek().kind == Tok::Ident && peek().text == s; }
  [[noreturn]] void error(const std::string& m) const {
    fail(ErrorKind::ParseError, m + " at offset " + std::to_string(peek().pos));
  }
  void expect(Tok k, const char* what) {
    if (peek().kind != k) error(std::string("expected ") + what);
    ++pos_;
  }
  void expect_ident(const char* kw) {
    if (!at_ident(kw)) error(std::string("expected ") + kw);
    ++pos_;
  }
  void expect_end() {
    if (peek().kind != Tok::End) error("unexpected '" + peek().text + "'");
  }

  // --- types ---------------------------------------------------------------
  bool unary_type_ctor(const Token& t) const {
    if (t.kind != Tok::Ident || is_keyword(t.text)) return false;
    auto a = sig_.arity(t.text);
    return a && *a == 1;
  }

  Type named_type(const std::string& name, std::vector<Type> args) {
    auto a = sig_.arity(name);
    if (!a) fail(ErrorKind::UnknownType, "unknown type constructor " + name);
    if (static_cast<std::size_t>(*a) != args.size())
      error("type constructor " + name + " expects " + std::to_string(*a) + " arguments");
    return Type::app(name, std::move(args));
  }

  Type type() {
    Type t = type_app();
    if (at_sym("->")) {
      ++pos_;
      return fun_ty(t, type());
    }
    return t;
  }

  Type type_app() {
    Type t = type_atom();
    while (unary_type_ctor(peek())) t = named_type(toks_[pos_++].text, {t});
    return t;
  }

  Type type_atom() {
    const Token& t = peek();
    if (t.kind == Tok::TyVar) {
      ++pos_;
      return Type::var(t.text);
    }
    if (t.kind == Tok::Ident && !is_keyword(t.text)) {
      ++pos_;
      return named_type(t.text, {});
    }
    if (t.kind == Tok::LParen) {
      ++pos_;
      std::vector<Type> args{type()};
      while (peek().kind == Tok::Comma) {
        ++pos_;
        args.push_back(type());
      }
      expect(Tok::RParen, "')'");
      if (args.size() == 1) return args[0];
      if (peek().kind != Tok::Ident) error("expected a type constructor");
      return named_type(toks_[pos_++].text, std::move(args));
    }
    error("expected a type");
  }

  // --- unification ---------------------------------------------------------
  Type meta() { return Type::var("?" + std::to_string(next_meta_++)); }
  static bool is_meta(const Type& t) { return t.is_var() && t.name()[0] == '?'; }

  Type resolve(const Type& t) const {
    if (is_meta(t)) {
      auto it = sol_.find(t.name());
      return it == sol_.end() ? t : resolve(it->second);
    }
    if (t.is_var() || t.args().empty()) return t;
    std::vector<Type> args;
    for (const auto& a : t.args()) args.push_back(resolve(a));
    return Type::app(t.name(), std::move(args));
  }

  bool occurs(const std::string& m, const Type& t) const {
    if (t.is_var()) return t.name() == m;
    for (const auto& a : t.args())
      if (occurs(m, a)) return true;
    return false;
  }

  bool unify_ok(const Type& a0, const Type& b0) {
    Type a = resolve(a0), b = resolve(b0);
    if (a == b) return true;
    if (is_meta(a)) {
      if (occurs(a.name(), b)) return false;
      sol_.insert_or_assign(a.name(), b);
      return true;
    }
    if (is_meta(b)) return unify_ok(b, a);
    if (a.is_var() || b.is_var() || a.name() != b.name() || a.args().size() != b.args().size())
      return false;
    for (std::size_t i = 0; i < a.args().size(); ++i)
      if (!unify_ok(a.args()[i], b.args()[i])) return false;
    return true;
  }

  void unify(const Type& a, const Type& b, const std::string& where) {
    if (!unify_ok(a, b))
      fail(ErrorKind::ElaborationError, "type mismatch in " + where + ": " +
                                            to_string(resolve(a)) + " vs " + to_string(resolve(b)));
  }

  bool try_unify(const Type& a, const Type& b) {
    auto saved = sol_;
    if (unify_ok(a, b)) return true;
    sol_ = std::move(saved);
    return false;
  }

  Type fresh_instance(const Type& generic) {
    std::vector<std::string> vs;
    collect_type_vars(generic, vs);
    TypeSubst theta;
    for (const auto& v : vs)
      if (!theta.count(v)) theta.emplace(v, meta());
    return type_subst(theta, generic);
  }

  // --- preterm builders ----------------------------------------------------
  static Pre leaf(Term::Kind k, std::string name, Type ty) { return Pre{k, std::move(name), std::move(ty), {}}; }

  Pre comb(Pre f, Pre x) {
    Type r = meta();
    unify(f.ty, fun_ty(x.ty, r), "application");
    return Pre{Term::Kind::Comb, {}, r, {std::move(f), std::move(x)}};
  }

  Pre constant(const std::string& name) {
    if (decode_literal(name)) return leaf(Term::Kind::Const, name, str_ty());
    auto g = sig_.constant_type(name);
    if (!g) fail(ErrorKind::UnknownConstant, "unknown constant " + name);
    return leaf(Term::Kind::Const, name, fresh_instance(*g));
  }

  Pre name_ref(const std::string& name, const std::optional<Type>& ann) {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->first != name) continue;
      if (!ann || try_unify(it->second, *ann)) return leaf(Term::Kind::Var, name, it->second);
    }
    if (sig_.has_constant(name)) {
      Pre c = constant(name);
      if (ann) unify(c.ty, *ann, "constant " + name);
      return c;
    }
    auto& tys = frees_[name];
    if (!ann) {
      if (tys.empty()) tys.push_back(meta());
      return leaf(Term::Kind::Var, name, tys.front());
    }
    for (const auto& t : tys)
      if (try_unify(t, *ann)) return leaf(Term::Kind::Var, name, t);
    tys.push_back(*ann);
    return leaf(Term::Kind::Var, name, *ann);
  }

  // --- terms ---------------------------------------------------------------
  bool at_binder() const { return at_sym("\\") || at_sym("!") || at_sym("?"); }

  Pre term() { return at_binder() ? binder() : level(1); }

  Pre binder() {
    std::string q = toks_[pos_++].text;
    std::vector<std::pair<std::string, Type>> vars;
    while (peek().kind != Tok::Dot) {
      if (peek().kind == Tok::LParen) {
        ++pos_;
        if (peek().kind != Tok::Ident || is_keyword(peek().text)) error("expected a variable");
        std::string n = toks_[pos_++].text;
        expect(Tok::Colon, "':'");
        vars.emplace_back(n, type());
        expect(Tok::RParen, "')'");
        continue;
      }
      if (peek().kind != Tok::Ident || is_keyword(peek().text)) error("expected a bound variable");
      std::string n = toks_[pos_++].text;
      if (peek().kind == Tok::Colon) {
        ++pos_;
        vars.emplace_back(n, type());
        if (peek().kind != Tok::Dot) error("expected '.' after an annotated bound variable");
        break;
      }
      vars.emplace_back(n, meta());
    }
    if (vars.empty()) error("binder without variables");
    expect(Tok::Dot, "'.'");
    for (const auto& v : vars) scope_.push_back(v);
    Pre body = term();
    for (std::size_t i = vars.size(); i-- > 0;) {
      scope_.pop_back();
      Pre v = leaf(Term::Kind::Var, vars[i].first, vars[i].second);
      Type fty = fun_ty(v.ty, body.ty);
      Pre abs{Term::Kind::Abs, {}, fty, {v, std::move(body)}};
      body = q == "\\" ? std::move(abs) : comb(constant(q), std::move(abs));
    }
    return body;
  }

  Pre operand(int lvl) { return at_binder() ? binder() : level(lvl); }

  Pre infix(const std::string& op, Pre l, Pre r) {
    return comb(comb(constant(op), std::move(l)), std::move(r));
  }

  Pre level(int lvl) {
    switch (lvl) {
      case 1:
      case 2:
      case 3: {
        static const char* ops[] = {"", "==>", "\\/", "/\\"};
        Pre l = level(lvl + 1);
        if (at_sym(ops[lvl])) {
          ++pos_;
          return infix(ops[lvl], std::move(l), operand(lvl));
        }
        return l;
      }
      case 4:
        if (at_sym("~")) {
          ++pos_;
          return comb(constant("~"), operand(4));
        }
        return level(5);
      case 5: {
        Pre l = level(6);
        if (at_sym("=") || at_sym("<=")) {
          std::string op = toks_[pos_++].text;
          return infix(op, std::move(l), operand(6));
        }
        return l;
      }
      case 6:
      case 7: {
        const char* op = lvl == 6 ? "+" : "*";
        Pre l = level(lvl + 1);
        while (at_sym(op)) {
          ++pos_;
          l = infix(op, std::move(l), level(lvl + 1));
        }
        return l;
      }
      default: return application();
    }
  }

  bool at_atom() const {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: return t.text == "eval" || t.text == "Q_" || t.text == "H_" || !is_keyword(t.text);
      case Tok::Str:
      case Tok::LParen: return true;
      default: return false;
    }
  }

  Pre application() {
    if (!at_atom()) error("expected a term");
    Pre f = atom();
    while (true) {
      if (at_atom()) {
        f = comb(std::move(f), atom());
      } else if (at_binder()) {
        return comb(std::move(f), binder());
      } else {
        return f;
      }
    }
  }

  Pre atom() {
    const Token& t = peek();
    if (t.kind == Tok::Str) {
      ++pos_;
      if (!decode_literal(t.text)) error("malformed string literal");
      return leaf(Term::Kind::Const, t.text, str_ty());
    }
    if (t.kind == Tok::LParen) return paren();
    std::string name = t.text;
    ++pos_;
    if (name == "Q_") {
      marks_.push_back(scope_.size());
      Pre body = term();
      expect_ident("_Q");
      marks_.pop_back();
      return Pre{Term::Kind::Quote, {}, epsilon_ty(), {std::move(body)}};
    }
    if (name == "H_") {
      if (marks_.empty()) fail(ErrorKind::ElaborationError, "hole outside a quotation");
      auto saved_scope = scope_;
      auto saved_marks = marks_;
      scope_.erase(scope_.begin() + static_cast<std::ptrdiff_t>(marks_.back()), scope_.end());
      marks_.pop_back();
      Pre c = term();
      expect_ident("_H");
      scope_ = std::move(saved_scope);
      marks_ = std::move(saved_marks);
      unify(c.ty, epsilon_ty(), "hole content");
      return Pre{Term::Kind::Hole, {}, meta(), {std::move(c)}};
    }
    if (name == "eval") {
      Pre c = term();
      expect_ident("to");
      Type ty = type();
      unify(c.ty, epsilon_ty(), "evaluation argument");
      return Pre{Term::Kind::Eval, {}, ty, {std::move(c)}};
    }
    if (peek().kind == Tok::Colon && !is_keyword(name)) {
      ++pos_;
      return name_ref(name, type());
    }
    return name_ref(name, std::nullopt);
  }

  Pre paren() {
    ++pos_;
    const Token& t = peek();
    // (op) and (op:ty)
    if (t.kind == Tok::Sym && t.text != "\\" && t.text != "->" &&
        (peek(1).kind == Tok::RParen || peek(1).kind == Tok::Colon)) {
      ++pos_;
      Pre c = constant(t.text);
      if (peek().kind == Tok::Colon) {
        ++pos_;
        unify(c.ty, type(), "constant " + t.text);
      }
      expect(Tok::RParen, "')'");
      return c;
    }
    // (name:ty) picks the binder or free variable by type.
    if (t.kind == Tok::Ident && !is_keyword(t.text) && peek(1).kind == Tok::Colon) {
      std::string name = t.text;
      pos_ += 2;
      Type ann = type();
      expect(Tok::RParen, "')'");
      return name_ref(name, ann);
    }
    Pre inner = term();
    if (peek().kind == Tok::Colon) {
      ++pos_;
      unify(inner.ty, type(), "annotation");
    }
    expect(Tok::RParen, "')'");
    return inner;
  }

  // --- final terms ---------------------------------------------------------
  Type final_type(const Type& t) const {
    Type r = resolve(t);
    std::vector<std::string> vs;
    collect_type_vars(r, vs);
    for (const auto& v : vs)
      if (v[0] == '?')
        fail(ErrorKind::ElaborationError, "could not infer a type; add an annotation");
    return r;
  }

  Term build(const Pre& p) const {
    switch (p.kind) {
      case Term::Kind::Var: return Term::var(p.name, final_type(p.ty));
      case Term::Kind::Const: return Term::constant(p.name, final_type(p.ty));
      case Term::Kind::Comb: return Term::comb(build(p.kids[0]), build(p.kids[1]));
      case Term::Kind::Abs: return Term::abs(build(p.kids[0]), build(p.kids[1]));
      case Term::Kind::Quote: return Term::quote(build(p.kids[0]));
      case Term::Kind::Hole: return Term::hole(build(p.kids[0]), final_type(p.ty));
      case Term::Kind::Eval: return Term::eval(build(p.kids[0]), final_type(p.ty));
    }
    fail(ErrorKind::ElaborationError, "bad preterm");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Signature& sig_;
  int next_meta_ = 0;
  std::map<std::string, Type> sol_;
  std::vector<std::pair<std::string, Type>> scope_;
  std::vector<std::size_t> marks_;
  std::map<std::string, std::vector<Type>> frees_;
};

}  // namespace

Type parse_type(std::string_view src, const Signature& sig) {
  return Parser(src, sig).type_only();
}

Term parse_term(std::string_view src, const Signature& sig) {
  Term t = Parser(src, sig).term_only();
  sig.check_term(t);
  return t;
}

}  // namespace cqe
