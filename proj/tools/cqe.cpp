// cqe: check proof scripts, explore them interactively, export theorems.
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cqe/session.hpp"

using namespace cqe;

namespace {

bool use_color() { return std::getenv("CQE_NO_COLOR") == nullptr && isatty(STDOUT_FILENO); }

int repl(const std::string& load, const RunOptions& opts) {
  Session s;
  if (!load.empty()) {
    int rc = run_script(s, load, std::cout, std::cerr, opts);
    if (rc != kExitOk) std::cerr << "(continuing after failed load)\n";
  }
  bool tty = isatty(STDIN_FILENO);
  std::string line;
  while (true) {
    if (tty) std::cout << "cqe> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    line = line.substr(first);
    if (line == ":quit" || line == ":q") break;
    if (line == ":state") {
      std::cout << s.state();
      continue;
    }
    if (line == ":thms") {
      for (const auto& [name, th] : s.theorems()) std::cout << s.show(name, th) << "\n";
      continue;
    }
    if (line == ":rules") {
      for (const auto& r : s.rule_names()) std::cout << r << "\n";
      continue;
    }
    if (line == ":help") {
      std::cout << "commands: constant axiom define register_nei thm check echo\n"
                   "meta: :state :thms :rules :quit\n";
      continue;
    }
    if (line[0] == ':') {
      std::cerr << "unknown meta command " << line << "\n";
      continue;
    }
    // Errors are reported and the loop goes on.
    run_script_text(s, line, "<repl>", std::cout, std::cerr, opts);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cqe: proof kernel and script checker for HOL with quotation and evaluation"};
  app.require_subcommand(1);

  std::string file, load, out_path, format = "json-like";
  bool trace = false;

  auto* check = app.add_subcommand("check", "Run a proof script");
  check->add_option("file", file, "Script to check")->required();
  check->add_flag("--trace", trace, "Print each command and the dependencies of each theorem");

  auto* rep = app.add_subcommand("repl", "Interactive session");
  rep->add_option("--load", load, "Script to run first");

  auto* exp = app.add_subcommand("export", "Run a script and write its theorems");
  exp->add_option("file", file, "Script to run")->required();
  exp->add_option("--out", out_path, "Output path")->required();
  exp->add_option("--format", format, "sexp or json-like");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputFailure;
  }

  RunOptions opts{trace, use_color()};
  if (*rep) return repl(load, opts);

  if (*exp && !known_export_format(format)) {
    std::cerr << "error: unknown export format '" << format << "' (expected sexp or json-like)\n";
    return kExitInputFailure;
  }
  Session s;
  int rc = run_script(s, file, std::cout, std::cerr, opts);
  if (rc != kExitOk || !*exp) return rc;
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kExitInputFailure;
  }
  out << export_theorems(s, format);
  return out ? kExitOk : kExitInputFailure;
}
