#include "cqe/session.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "cqe/frontend.hpp"

namespace cqe {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// `text` or text.
std::string unquote(std::string_view s) {
  std::string t = trim(s);
  if (t.size() >= 2 && t.front() == '`' && t.back() == '`') return t.substr(1, t.size() - 2);
  return t;
}

bool is_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'') return false;
  return true;
}

// Splits "lhs <sep> rhs" at the first separator.
std::pair<std::string, std::string> split_at(const std::string& text, const std::string& sep,
                                             const std::string& keyword) {
  auto at = text.find(sep);
  // A word separator may be followed by a line break instead of a space.
  if (at == std::string::npos && sep.back() == ' ')
    for (auto i = text.find(sep.substr(0, sep.size() - 1)); i != std::string::npos;
         i = text.find(sep.substr(0, sep.size() - 1), i + 1))
      if (i + sep.size() - 1 == text.size() || std::isspace(static_cast<unsigned char>(text[i + sep.size() - 1]))) {
        at = i;
        break;
      }
  if (at == std::string::npos)
    fail(ErrorKind::ParseError, keyword + ": expected '" + trim(sep) + "'");
  std::string lhs = trim(text.substr(0, at));
  if (!is_name(lhs)) fail(ErrorKind::ParseError, keyword + ": malformed name '" + lhs + "'");
  return {lhs, trim(text.substr(at + sep.size()))};
}

// --- proof expressions --------------------------------------------------------

enum class PT { Ident, Quoted, Str, LBrack, RBrack, LParen, RParen, Comma, Slash, End };

struct PTok {
  PT kind;
  std::string text;
  std::size_t pos;
};

std::vector<PTok> lex_expr(std::string_view s) {
  std::vector<PTok> out;
  std::size_t i = 0;
  auto bad = [&](const std::string& m) {
    fail(ErrorKind::ParseError, m + " at offset " + std::to_string(i) + " of proof expression");
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    auto single = [&](PT k) { out.push_back({k, std::string(1, c), i++}); };
    switch (c) {
      case '[': single(PT::LBrack); continue;
      case ']': single(PT::RBrack); continue;
      case '(': single(PT::LParen); continue;
      case ')': single(PT::RParen); continue;
      case ',': single(PT::Comma); continue;
      case '/': single(PT::Slash); continue;
      default: break;
    }
    if (c == '`') {
      auto end = s.find('`', i + 1);
      if (end == std::string_view::npos) bad("unterminated `");
      out.push_back({PT::Quoted, std::string(s.substr(i + 1, end - i - 1)), start});
      i = end + 1;
      continue;
    }
    if (c == '"') {
      auto end = s.find('"', i + 1);
      if (end == std::string_view::npos) bad("unterminated string");
      out.push_back({PT::Str, std::string(s.substr(i + 1, end - i - 1)), start});
      i = end + 1;
      continue;
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' ||
                              s[i] == '\''))
        ++i;
      out.push_back({PT::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    bad(std::string("unexpected '") + c + "'");
  }
  out.push_back({PT::End, "", s.size()});
  return out;
}

enum class Arg { Thm, Term, Type, Name, Inst, TyInst, Thms };

struct Val {
  std::optional<Theorem> th;
  std::optional<Term> tm;
  std::optional<Type> ty;
  std::string name;
  Bindings inst;
  TypeSubst tyinst;
  std::vector<Theorem> thms;
};

using Args = std::vector<Val>;

struct Rule {
  std::vector<Arg> args;
  std::function<Theorem(const Kernel&, const Logic&, const Args&)> fn;
};

const std::map<std::string, Rule>& rules() {
  using A = Arg;
  using K = const Kernel&;
  using L = const Logic&;
  using V = const Args&;
  static const std::map<std::string, Rule> table = {
      // primitive rules
      {"REFL", {{A::Term}, [](K k, L, V a) { return k.REFL(*a[0].tm); }}},
      {"TRANS", {{A::Thm, A::Thm}, [](K k, L, V a) { return k.TRANS(*a[0].th, *a[1].th); }}},
      {"MK_COMB", {{A::Thm, A::Thm}, [](K k, L, V a) { return k.MK_COMB(*a[0].th, *a[1].th); }}},
      {"ABS", {{A::Term, A::Thm}, [](K k, L, V a) { return k.ABS(*a[0].tm, *a[1].th); }}},
      {"BETA", {{A::Term}, [](K k, L, V a) { return k.BETA(*a[0].tm); }}},
      {"ASSUME", {{A::Term}, [](K k, L, V a) { return k.ASSUME(*a[0].tm); }}},
      {"EQ_MP", {{A::Thm, A::Thm}, [](K k, L, V a) { return k.EQ_MP(*a[0].th, *a[1].th); }}},
      {"DEDUCT_ANTISYM",
       {{A::Thm, A::Thm}, [](K k, L, V a) { return k.DEDUCT_ANTISYM(*a[0].th, *a[1].th); }}},
      {"INST_TYPE",
       {{A::TyInst, A::Thm}, [](K k, L, V a) { return k.INST_TYPE(a[0].tyinst, *a[1].th); }}},
      {"INST", {{A::Inst, A::Thm}, [](K k, L, V a) { return k.INST(a[0].inst, *a[1].th); }}},
      {"EVAL_CONG",
       {{A::Thm, A::Type}, [](K k, L, V a) { return k.EVAL_CONG(*a[0].th, *a[1].ty); }}},
      // quotation and evaluation
      {"LAW_OF_QUO", {{A::Term}, [](K k, L, V a) { return k.LAW_OF_QUO(*a[0].tm); }}},
      {"LAW_OF_QUO_STEP", {{A::Term}, [](K k, L, V a) { return k.LAW_OF_QUO_STEP(*a[0].tm); }}},
      {"DISQUO", {{A::Term, A::Type}, [](K k, L, V a) { return k.DISQUO(*a[0].tm, *a[1].ty); }}},
      {"APP_SPLIT",
       {{A::Term, A::Term, A::Type, A::Type},
        [](K k, L, V a) { return k.APP_SPLIT(*a[0].tm, *a[1].tm, *a[2].ty, *a[3].ty); }}},
      {"ABS_SPLIT",
       {{A::Term, A::Term, A::Type},
        [](K k, L, V a) { return k.ABS_SPLIT(*a[0].tm, *a[1].tm, *a[2].ty); }}},
      {"QUOTABLE", {{A::Term}, [](K k, L, V a) { return k.QUOTABLE(*a[0].tm); }}},
      {"BETA_EVAL", {{A::Term}, [](K k, L, V a) { return k.BETA_EVAL(*a[0].tm); }}},
      {"BETA_REVAL",
       {{A::Term, A::Term, A::Term, A::Type},
        [](K k, L, V a) { return k.BETA_REVAL(*a[0].tm, *a[1].tm, *a[2].tm, *a[3].ty); }}},
      {"NOT_FREE_OR_EFFECTIVE_IN",
       {{A::Term, A::Term},
        [](K k, L, V a) { return k.NOT_FREE_OR_EFFECTIVE_IN(*a[0].tm, *a[1].tm); }}},
      {"NEITHER_EFFECTIVE",
       {{A::Term, A::Term, A::Term, A::Term},
        [](K k, L, V a) { return k.NEITHER_EFFECTIVE(*a[0].tm, *a[1].tm, *a[2].tm, *a[3].tm); }}},
      // trusted conversions
      {"IS_EXPR_TYPE_CONV",
       {{A::Term, A::Term}, [](K k, L, V a) { return k.IS_EXPR_TYPE_CONV(*a[0].tm, *a[1].tm); }}},
      {"IS_FREE_IN_CONV",
       {{A::Term, A::Term}, [](K k, L, V a) { return k.IS_FREE_IN_CONV(*a[0].tm, *a[1].tm); }}},
      {"CLOSED_CONV", {{A::Term}, [](K k, L, V a) { return k.CLOSED_CONV(*a[0].tm); }}},
      {"DECIDE", {{A::Name, A::Term}, [](K k, L, V a) { return k.DECIDE(a[0].name, *a[1].tm); }}},
      // derived rules
      {"SYM", {{A::Thm}, [](K, L l, V a) { return l.SYM(*a[0].th); }}},
      {"AP_TERM", {{A::Term, A::Thm}, [](K, L l, V a) { return l.AP_TERM(*a[0].tm, *a[1].th); }}},
      {"AP_THM", {{A::Thm, A::Term}, [](K, L l, V a) { return l.AP_THM(*a[0].th, *a[1].tm); }}},
      {"TRUTH", {{}, [](K, L l, V) { return l.TRUTH(); }}},
      {"EQT_INTRO", {{A::Thm}, [](K, L l, V a) { return l.EQT_INTRO(*a[0].th); }}},
      {"EQT_ELIM", {{A::Thm}, [](K, L l, V a) { return l.EQT_ELIM(*a[0].th); }}},
      {"EQF_INTRO", {{A::Thm}, [](K, L l, V a) { return l.EQF_INTRO(*a[0].th); }}},
      {"EQF_ELIM", {{A::Thm}, [](K, L l, V a) { return l.EQF_ELIM(*a[0].th); }}},
      {"CONJ", {{A::Thm, A::Thm}, [](K, L l, V a) { return l.CONJ(*a[0].th, *a[1].th); }}},
      {"CONJUNCT1", {{A::Thm}, [](K, L l, V a) { return l.CONJUNCT1(*a[0].th); }}},
      {"CONJUNCT2", {{A::Thm}, [](K, L l, V a) { return l.CONJUNCT2(*a[0].th); }}},
      {"MP", {{A::Thm, A::Thm}, [](K, L l, V a) { return l.MP(*a[0].th, *a[1].th); }}},
      {"DISCH", {{A::Term, A::Thm}, [](K, L l, V a) { return l.DISCH(*a[0].tm, *a[1].th); }}},
      {"UNDISCH", {{A::Thm}, [](K, L l, V a) { return l.UNDISCH(*a[0].th); }}},
      {"GEN", {{A::Term, A::Thm}, [](K, L l, V a) { return l.GEN(*a[0].tm, *a[1].th); }}},
      {"SPEC", {{A::Term, A::Thm}, [](K, L l, V a) { return l.SPEC(*a[0].tm, *a[1].th); }}},
      {"PROVE_HYP",
       {{A::Thm, A::Thm}, [](K, L l, V a) { return l.PROVE_HYP(*a[0].th, *a[1].th); }}},
      {"ADD_ASSUM",
       {{A::Term, A::Thm}, [](K, L l, V a) { return l.ADD_ASSUM(*a[0].tm, *a[1].th); }}},
      {"NOT_INTRO", {{A::Thm}, [](K, L l, V a) { return l.NOT_INTRO(*a[0].th); }}},
      {"NOT_ELIM", {{A::Thm}, [](K, L l, V a) { return l.NOT_ELIM(*a[0].th); }}},
      {"CONTR", {{A::Term, A::Thm}, [](K, L l, V a) { return l.CONTR(*a[0].tm, *a[1].th); }}},
      {"DISJ1", {{A::Thm, A::Term}, [](K, L l, V a) { return l.DISJ1(*a[0].th, *a[1].tm); }}},
      {"DISJ2", {{A::Term, A::Thm}, [](K, L l, V a) { return l.DISJ2(*a[0].tm, *a[1].th); }}},
      {"DISJ_CASES",
       {{A::Thm, A::Thm, A::Thm},
        [](K, L l, V a) { return l.DISJ_CASES(*a[0].th, *a[1].th, *a[2].th); }}},
      // conversions
      {"BETA_CONV", {{A::Term}, [](K, L l, V a) { return l.BETA_CONV(*a[0].tm); }}},
      {"BETA_NORM_CONV", {{A::Term}, [](K, L l, V a) { return l.BETA_NORM_CONV(*a[0].tm); }}},
      {"BETA_RULE", {{A::Thm}, [](K, L l, V a) { return l.BETA_RULE(*a[0].th); }}},
      {"REWRITE_CONV",
       {{A::Thms, A::Term}, [](K, L l, V a) { return l.REWRITE_CONV(a[0].thms, *a[1].tm); }}},
      {"REWRITE", {{A::Thms, A::Thm}, [](K, L l, V a) { return l.REWRITE(a[0].thms, *a[1].th); }}},
      {"DISQUOTE_CONV",
       {{A::Term, A::Type}, [](K, L l, V a) { return l.DISQUOTE_CONV(*a[0].tm, *a[1].ty); }}},
      {"EVAL_REDEX_CONV", {{A::Term}, [](K, L l, V a) { return l.EVAL_REDEX_CONV(*a[0].tm); }}},
      {"PROVE_SYNTAX", {{A::Term}, [](K, L l, V a) { return l.PROVE_SYNTAX(*a[0].tm); }}},
      {"MP_SYNTAX", {{A::Thm}, [](K, L l, V a) { return l.MP_SYNTAX(*a[0].th); }}},
      {"ARITH_CLASS_CONV",
       {{A::Name, A::Term}, [](K, L l, V a) { return ARITH_CLASS_CONV(l, a[0].name, *a[1].tm); }}},
  };
  return table;
}

class ExprParser {
 public:
  ExprParser(const Session& s, std::string_view src) : s_(s), toks_(lex_expr(src)) {}

  Theorem run() {
    Theorem th = expr();
    if (peek().kind != PT::End) error("unexpected '" + peek().text + "'");
    return th;
  }

 private:
  const PTok& peek() const { return toks_[pos_]; }
  [[noreturn]] void error(const std::string& m) const {
    fail(ErrorKind::ParseError, m + " at offset " + std::to_string(peek().pos) + " of proof expression");
  }
  void expect(PT k, const char* what) {
    if (peek().kind != k) error(std::string("expected ") + what);
    ++pos_;
  }

  const Signature& sig() const { return s_.kernel().signature(); }

  Theorem expr() {
    if (peek().kind == PT::LParen) {
      ++pos_;
      Theorem th = expr();
      expect(PT::RParen, "')'");
      return th;
    }
    if (peek().kind != PT::Ident) error("expected a rule or theorem name");
    std::string head = toks_[pos_++].text;
    auto it = rules().find(head);
    if (it == rules().end()) return theorem(head);
    Args args;
    for (Arg a : it->second.args) args.push_back(arg(a, head));
    return it->second.fn(s_.kernel(), s_.logic(), args);
  }

  Theorem theorem(const std::string& name) const {
    auto th = s_.lookup(name);
    if (!th) fail(ErrorKind::UnknownTheorem, "no theorem named " + name);
    return *th;
  }

  Theorem thm_arg() {
    if (peek().kind == PT::LParen) return expr();
    if (peek().kind != PT::Ident) error("expected a theorem");
    std::string name = toks_[pos_++].text;
    auto it = rules().find(name);
    if (it != rules().end() && it->second.args.empty()) return it->second.fn(s_.kernel(), s_.logic(), {});
    return theorem(name);
  }

  std::string quoted(const char* what) {
    if (peek().kind != PT::Quoted) error(std::string("expected ") + what);
    return toks_[pos_++].text;
  }

  Term term_arg() {
    std::string t = quoted("a `term`");
    if (!t.empty() && t[0] == ':') error("expected a term, found a type");
    return parse_term(t, sig());
  }

  Type type_arg() {
    std::string t = trim(quoted("a `:type`"));
    if (t.empty() || t[0] != ':') error("expected a `:type`");
    return parse_type(t.substr(1), sig());
  }

  Val arg(Arg kind, const std::string& rule) {
    Val v;
    switch (kind) {
      case Arg::Thm: v.th = thm_arg(); break;
      case Arg::Term: v.tm = term_arg(); break;
      case Arg::Type: v.ty = type_arg(); break;
      case Arg::Name:
        if (peek().kind != PT::Ident && peek().kind != PT::Str) error(rule + ": expected a name");
        v.name = toks_[pos_++].text;
        break;
      case Arg::Inst:
        list([&] {
          Term t = term_arg();
          expect(PT::Slash, "'/'");
          Term x = term_arg();
          v.inst.emplace_back(x, t);
        });
        break;
      case Arg::TyInst:
        list([&] {
          Type t = type_arg();
          expect(PT::Slash, "'/'");
          Type a = type_arg();
          if (!a.is_var()) error("expected a type variable after '/'");
          v.tyinst.insert_or_assign(a.name(), t);
        });
        break;
      case Arg::Thms: list([&] { v.thms.push_back(expr()); }); break;
    }
    return v;
  }

  template <class F>
  void list(F&& item) {
    expect(PT::LBrack, "'['");
    if (peek().kind == PT::RBrack) {
      ++pos_;
      return;
    }
    while (true) {
      item();
      if (peek().kind == PT::Comma) {
        ++pos_;
        continue;
      }
      expect(PT::RBrack, "']'");
      return;
    }
  }

  const Session& s_;
  std::vector<PTok> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

// --- scripts -----------------------------------------------------------------

std::vector<Command> parse_script(std::string_view src, const std::string& file) {
  std::vector<Command> out;
  int line_no = 0;
  std::size_t at = 0;
  while (at <= src.size()) {
    auto nl = src.find('\n', at);
    std::string_view line = src.substr(at, nl == std::string_view::npos ? src.size() - at : nl - at);
    at = nl == std::string_view::npos ? src.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (std::isspace(static_cast<unsigned char>(line[0]))) {
      if (out.empty())
        fail(ErrorKind::ParseError, file + ":" + std::to_string(line_no) +
                                        ": continuation line without a command");
      out.back().text += "\n" + t;
      out.back().span.end_line = line_no;
      out.back().span.end_column = static_cast<int>(line.size());
      continue;
    }
    auto sp = t.find_first_of(" \t");
    Command c;
    c.keyword = t.substr(0, sp);
    c.text = sp == std::string::npos ? "" : trim(t.substr(sp));
    c.span = {file, line_no, 1, line_no, static_cast<int>(line.size())};
    out.push_back(std::move(c));
  }
  return out;
}

// --- session -----------------------------------------------------------------

namespace {

Kernel& prepared(Kernel& k) {
  install_bootstrap(k);
  install_arithmetic(k);
  return k;
}

}  // namespace

Session::Session() : lg_(prepared(k_)) {}

std::optional<Theorem> Session::lookup(const std::string& name) const {
  if (auto it = index_.find(name); it != index_.end()) return theorems_[it->second].second;
  if (auto ax = k_.axiom(name)) return ax;
  if (auto it = def_names_.find(name); it != def_names_.end()) return k_.definition(it->second);
  return std::nullopt;
}

bool Session::name_taken(const std::string& name) const { return lookup(name).has_value(); }

void Session::bind(const std::string& name, const Theorem& th) {
  if (name_taken(name)) fail(ErrorKind::DuplicateName, "name already bound: " + name);
  index_.emplace(name, theorems_.size());
  theorems_.emplace_back(name, th);
}

std::vector<std::string> Session::rule_names() const {
  std::vector<std::string> out;
  for (const auto& [name, r] : rules()) out.push_back(name);
  return out;
}

std::string Session::show(const std::string& name, const Theorem& th) const {
  std::string out = name + ": ";
  for (std::size_t i = 0; i < th.hypotheses().size(); ++i) {
    if (i) out += ", ";
    out += show_term(th.hypotheses()[i]);
  }
  if (!th.hypotheses().empty()) out += " ";
  return out + "|- " + show_term(th.conclusion());
}

std::string Session::state() const {
  std::ostringstream os;
  os << "constants: " << k_.signature().constant_order().size() << "\n"
     << "axioms: " << k_.axioms().size() << "\n"
     << "definitions: " << k_.definitions().size() << "\n"
     << "theorems: " << theorems_.size() << "\n"
     << "registry: " << k_.registry().size() << "\n";
  for (const auto& e : k_.registry())
    os << "  " << show_term(e.variable) << " not effective in " << show_term(e.term) << "\n";
  return os.str();
}

Theorem Session::evaluate(std::string_view proof_expr) const {
  return ExprParser(*this, proof_expr).run();
}

std::string Session::execute(const Command& c) {
  const Signature& sig = k_.signature();
  const std::string& kw = c.keyword;
  if (kw == "echo") return c.text;
  if (kw == "constant") {
    auto [name, ty] = split_at(c.text, ":", kw);
    k_.new_constant(name, parse_type(unquote(ty), sig));
    return "constant " + name + " : " + print_type(*sig.constant_type(name));
  }
  if (kw == "axiom") {
    auto [name, body] = split_at(c.text, ":=", kw);
    if (name_taken(name)) fail(ErrorKind::DuplicateName, "name already bound: " + name);
    return show(name, k_.new_axiom(name, parse_term(unquote(body), sig)));
  }
  if (kw == "define") {
    auto [name, body] = split_at(c.text, ":=", kw);
    std::string def = name + "_DEF";
    if (name_taken(def)) fail(ErrorKind::DuplicateName, "name already bound: " + def);
    Theorem th = k_.new_basic_definition(name, parse_term(unquote(body), sig));
    def_names_.emplace(def, name);
    return show(def, th);
  }
  if (kw == "register_nei") {
    Theorem th = evaluate(c.text);
    k_.register_not_effective(th);
    auto sc = logic::dest_not_effective(th.conclusion());
    return "registered: " + show_term(sc->variable) + " not effective in " + show_term(sc->term);
  }
  if (kw == "thm") {
    auto [name, expr] = split_at(c.text, ":=", kw);
    Theorem th = evaluate(expr);
    bind(name, th);
    return show(name, th);
  }
  if (kw == "check") {
    auto [name, want] = split_at(c.text, " matches ", kw);
    auto th = lookup(name);
    if (!th) fail(ErrorKind::UnknownTheorem, "no theorem named " + name);
    Term t = parse_term(unquote(want), sig);
    if (!th->hypotheses().empty())
      fail(ErrorKind::WrongShape, "check " + name + ": theorem has hypotheses");
    if (!alpha_equivalent(th->conclusion(), t))
      fail(ErrorKind::WrongShape, "check " + name + ": conclusion is " +
                                      show_term(th->conclusion()) + ", expected " + show_term(t));
    return "checked " + name;
  }
  fail(ErrorKind::ParseError, "unknown command '" + kw + "'");
}

// --- running -----------------------------------------------------------------

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::ParseError:
    case ErrorKind::ElaborationError:
    case ErrorKind::Io: return kExitInputFailure;
    default: return kExitProofFailure;
  }
}

std::string describe_error(const Error& e) {
  std::string out = e.what();
  if (auto* b = dynamic_cast<const SubstitutionBlocked*>(&e)) {
    out += "\n  needs one of (prove it and use register_nei):";
    for (const auto& sc : b->alternatives())
      out += "\n    " + show_term(sc.variable) + " not effective in " + show_term(sc.term);
  }
  return out;
}

namespace {

std::string paint(const RunOptions& o, const char* code, const std::string& s) {
  return o.color ? std::string("\033[") + code + "m" + s + "\033[0m" : s;
}

}  // namespace

int run_script_text(Session& s, std::string_view src, const std::string& file, std::ostream& out,
                    std::ostream& err, const RunOptions& opts) {
  std::vector<Command> cmds;
  try {
    cmds = parse_script(src, file);
  } catch (const Error& e) {
    err << paint(opts, "31", "error") << ": " << e.what() << "\n";
    return kExitInputFailure;
  }
  for (const auto& c : cmds) {
    if (opts.trace) out << paint(opts, "2", file + ":" + std::to_string(c.span.line) + ": " + c.keyword) << "\n";
    try {
      std::string r = s.execute(c);
      if (!r.empty()) out << r << "\n";
      if (opts.trace && c.keyword == "thm") {
        const Theorem& th = s.theorems().back().second;
        out << "  axioms:";
        for (const auto& a : th.axioms()) out << " " << a;
        out << "\n  oracles:";
        for (const auto& o : th.oracles()) out << " " << o;
        out << "\n";
      }
    } catch (const Error& e) {
      err << paint(opts, "31", "error") << " at " << c.span.file << ":" << c.span.line << ":"
          << c.span.column << "-" << c.span.end_line << ":" << c.span.end_column << " in '"
          << c.keyword << "': " << describe_error(e) << "\n";
      return exit_code_for(e);
    }
  }
  if (opts.trace) out << paint(opts, "32", "ok") << ": " << cmds.size() << " commands\n";
  return kExitOk;
}

int run_script(Session& s, const std::string& path, std::ostream& out, std::ostream& err,
               const RunOptions& opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << paint(opts, "31", "error") << ": cannot read " << path << "\n";
    return kExitInputFailure;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return run_script_text(s, buf.str(), path, out, err, opts);
}

}  // namespace cqe
