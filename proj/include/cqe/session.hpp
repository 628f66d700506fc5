#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"  // nlohmann, vendored

#include "cqe/kernel.hpp"
#include "cqe/logic.hpp"

namespace cqe {

struct SourceSpan {
  std::string file;
  int line = 0;
  int column = 0;
  int end_line = 0;
  int end_column = 0;
};

// One script command. `text` is everything after the keyword, with
// continuation lines joined by newlines.
struct Command {
  std::string keyword;
  std::string text;
  SourceSpan span;
};

// Script layout: a command starts in column 1; indented lines continue the
// previous command; blank lines and lines starting with # are skipped.
std::vector<Command> parse_script(std::string_view src, const std::string& file);

// A proving session: the kernel with the base theories installed, derived
// rules, and named theorems. Commands:
//
//   constant <name> : <type>
//   axiom <name> := <term>
//   define <name> := <term>              binds <name>_DEF
//   register_nei <proof-expr>
//   thm <name> := <proof-expr>
//   check <name> matches <term>          no hypotheses, same conclusion
//   echo <text>
//
// A proof expression is a rule name followed by its arguments, or a
// theorem name. Arguments are theorem names, `term`, `:type`, names,
// [`t1`/`x1`, ...] instantiations, [th1, ...] theorem lists, or a
// parenthesized proof expression.
class Session {
 public:
  Session();
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  Kernel& kernel() { return k_; }
  const Kernel& kernel() const { return k_; }
  const Logic& logic() const { return lg_; }

  // Runs one command and returns its printable result (possibly empty).
  std::string execute(const Command& c);
  Theorem evaluate(std::string_view proof_expr) const;

  // Theorems bound by thm, in binding order.
  const std::vector<std::pair<std::string, Theorem>>& theorems() const { return theorems_; }
  // thm bindings, then axioms, then definitions (<name>_DEF).
  std::optional<Theorem> lookup(const std::string& name) const;
  std::vector<std::string> rule_names() const;
  std::string state() const;
  std::string show(const std::string& name, const Theorem& th) const;

 private:
  void bind(const std::string& name, const Theorem& th);
  bool name_taken(const std::string& name) const;

  Kernel k_;
  Logic lg_;
  std::vector<std::pair<std::string, Theorem>> theorems_;
  std::map<std::string, std::size_t> index_;
  std::map<std::string, std::string> def_names_;  // foo_DEF -> foo
};

enum ExitCode { kExitOk = 0, kExitProofFailure = 1, kExitInputFailure = 2 };

struct RunOptions {
  bool trace = false;
  bool color = false;
};

// Runs commands in order and stops at the first failure, reporting the
// command, its location and the error (with the side conditions a blocked
// substitution needs).
int run_script_text(Session& s, std::string_view src, const std::string& file, std::ostream& out,
                    std::ostream& err, const RunOptions& opts = {});
int run_script(Session& s, const std::string& path, std::ostream& out, std::ostream& err,
               const RunOptions& opts = {});
// Exit code for an error raised while running a command.
int exit_code_for(const Error& e);
std::string describe_error(const Error& e);

// Export of the session's thm bindings. Formats: "json-like" and "sexp".
// Field order is fixed: name, hypotheses, conclusion, axioms, oracles; each
// term appears as printed text and as a constructor tree.
nlohmann::ordered_json export_document(const Session& s);
std::string export_theorems(const Session& s, const std::string& format);
bool known_export_format(const std::string& format);
nlohmann::ordered_json term_tree(const Term& t);
Term term_from_tree(const nlohmann::ordered_json& tree, const Signature& sig);

}  // namespace cqe
