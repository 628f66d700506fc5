#include <sstream>

#include "cqe/frontend.hpp"
#include "cqe/session.hpp"

namespace cqe {

using json = nlohmann::ordered_json;

json term_tree(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var: return json::array({"Var", t.name(), print_type(t.type())});
    case Term::Kind::Const: return json::array({"Const", t.name(), print_type(t.type())});
    case Term::Kind::Comb: return json::array({"Comb", term_tree(t.op()), term_tree(t.arg())});
    case Term::Kind::Abs: return json::array({"Abs", term_tree(t.binder()), term_tree(t.body())});
    case Term::Kind::Quote: return json::array({"Quote", term_tree(t.body())});
    case Term::Kind::Hole:
      return json::array({"Hole", term_tree(t.content()), print_type(t.annotation())});
    case Term::Kind::Eval:
      return json::array({"Eval", term_tree(t.content()), print_type(t.annotation())});
  }
  return {};
}

Term term_from_tree(const json& tree, const Signature& sig) {
  auto bad = [] { fail(ErrorKind::ParseError, "malformed term tree"); };
  if (!tree.is_array() || tree.empty() || !tree[0].is_string()) bad();
  const std::string tag = tree[0].get<std::string>();
  auto size_is = [&](std::size_t n) {
    if (tree.size() != n) bad();
  };
  auto ty = [&](std::size_t i) { return parse_type(tree[i].get<std::string>(), sig); };
  if (tag == "Var" || tag == "Const") {
    size_is(3);
    std::string name = tree[1].get<std::string>();
    return tag == "Var" ? Term::var(name, ty(2)) : Term::constant(name, ty(2));
  }
  if (tag == "Comb") {
    size_is(3);
    return Term::comb(term_from_tree(tree[1], sig), term_from_tree(tree[2], sig));
  }
  if (tag == "Abs") {
    size_is(3);
    return Term::abs(term_from_tree(tree[1], sig), term_from_tree(tree[2], sig));
  }
  if (tag == "Quote") {
    size_is(2);
    return Term::quote(term_from_tree(tree[1], sig));
  }
  if (tag == "Hole") {
    size_is(3);
    return Term::hole(term_from_tree(tree[1], sig), ty(2));
  }
  if (tag == "Eval") {
    size_is(3);
    return Term::eval(term_from_tree(tree[1], sig), ty(2));
  }
  bad();
  return Term::var("?", bool_ty());
}

json export_document(const Session& s) {
  const Signature& sig = s.kernel().signature();
  auto term = [&](const Term& t) {
    json j;
    j["text"] = print_term(t, sig);
    j["tree"] = term_tree(t);
    return j;
  };
  json doc;
  doc["format"] = "cqe-export";
  doc["version"] = 1;
  doc["theorems"] = json::array();
  for (const auto& [name, th] : s.theorems()) {
    json e;
    e["name"] = name;
    e["hypotheses"] = json::array();
    for (const auto& h : th.hypotheses()) e["hypotheses"].push_back(term(h));
    e["conclusion"] = term(th.conclusion());
    e["axioms"] = json(th.axioms());
    e["oracles"] = json(th.oracles());
    doc["theorems"].push_back(std::move(e));
  }
  return doc;
}

namespace {

std::string atom(const json& j) {
  if (j.is_string()) {
    std::string out = "\"";
    for (char c : j.get<std::string>()) {
      if (c == '"' || c == '\\') out += '\\';
      if (c == '\n') {
        out += "\\n";
        continue;
      }
      out += c;
    }
    return out + "\"";
  }
  return j.dump();
}

void tree_sexp(const json& t, std::ostream& os) {
  os << '(' << t[0].get<std::string>();
  for (std::size_t i = 1; i < t.size(); ++i) {
    os << ' ';
    if (t[i].is_array()) tree_sexp(t[i], os);
    else os << atom(t[i]);
  }
  os << ')';
}

void term_sexp(const char* tag, const json& t, std::ostream& os) {
  os << '(' << tag << " (text " << atom(t["text"]) << ") (tree ";
  tree_sexp(t["tree"], os);
  os << "))";
}

std::string to_sexp(const json& doc) {
  std::ostringstream os;
  os << "(cqe-export\n  (version " << doc["version"].dump() << ")";
  for (const auto& e : doc["theorems"]) {
    os << "\n  (theorem\n    (name " << atom(e["name"]) << ")\n    (hypotheses";
    for (const auto& h : e["hypotheses"]) {
      os << "\n      ";
      term_sexp("hypothesis", h, os);
    }
    os << ")\n    ";
    term_sexp("conclusion", e["conclusion"], os);
    for (const char* field : {"axioms", "oracles"}) {
      os << "\n    (" << field;
      for (const auto& a : e[field]) os << ' ' << atom(a);
      os << ')';
    }
    os << ')';
  }
  os << ")\n";
  return os.str();
}

}  // namespace

bool known_export_format(const std::string& format) {
  return format == "json-like" || format == "sexp";
}

std::string export_theorems(const Session& s, const std::string& format) {
  if (!known_export_format(format))
    fail(ErrorKind::ParseError, "unknown export format '" + format + "'");
  json doc = export_document(s);
  return format == "sexp" ? to_sexp(doc) : doc.dump(2) + "\n";
}

}  // namespace cqe
