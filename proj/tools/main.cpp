#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "nsym/expr/session.hpp"

namespace {

using nsym::expr::Session;

struct CommonFlags {
  std::string order, conj, disj, impl;
  std::vector<std::string> tables;
  std::string alphabet;
  int dim = 0;
  bool json = false;
  bool keep_going = false;
  bool no_color = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--order", f.order, "prevalence order chain, e.g. T>I>F");
  cmd->add_option("--conj", f.conj, "conjunction: v1|v2|v3 or numeric spec");
  cmd->add_option("--disj", f.disj, "disjunction: v1 or numeric spec");
  cmd->add_option("--impl", f.impl, "implication class, e.g. negor or in4:lukasiewicz");
  cmd->add_option("--table", f.tables, "table file(s) to load");
  cmd->add_option("--alphabet", f.alphabet, "refined alphabet sizes p-r-s");
  cmd->add_option("--dim", f.dim, "hypercomplex dimension");
  cmd->add_flag("--json", f.json, "emit one JSON record per line");
  cmd->add_flag("--keep-going", f.keep_going, "batch: evaluate every line despite errors");
  cmd->add_flag("--no-color", f.no_color, "disable ANSI color");
}

// returns 3 on bad configuration
int apply_flags(Session& s, const CommonFlags& f) {
  auto run = [&](const std::string& cmd) {
    auto r = s.run_line(cmd);
    if (r.tag == Session::LineOut::Tag::config_error) {
      std::cerr << "error: " << r.text << "\n";
      return 3;
    }
    return 0;
  };
  if (!f.order.empty())
    if (int c = run(":order " + f.order)) return c;
  if (!f.conj.empty())
    if (int c = run(":conj " + f.conj)) return c;
  if (!f.disj.empty())
    if (int c = run(":disj " + f.disj)) return c;
  if (!f.impl.empty())
    if (int c = run(":impl " + f.impl)) return c;
  for (const auto& t : f.tables)
    if (int c = run(":table " + t)) return c;
  if (!f.alphabet.empty())
    if (int c = run(":alphabet " + f.alphabet)) return c;
  if (f.dim > 0)
    if (int c = run(":dim " + std::to_string(f.dim))) return c;
  return 0;
}

bool want_color(const CommonFlags& f) {
  if (f.no_color) return false;
  if (std::getenv("NO_COLOR") != nullptr) return false;
  return isatty(fileno(stdout));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic multi-valued algebra calculator"};
  app.require_subcommand(1);

  CommonFlags ef, rf, bf;
  std::string expr_text, batch_path;

  auto* cmd_eval = app.add_subcommand("eval", "evaluate one expression");
  cmd_eval->add_option("expr", expr_text, "expression text")->required();
  add_common(cmd_eval, ef);

  auto* cmd_repl = app.add_subcommand("repl", "interactive loop");
  add_common(cmd_repl, rf);

  auto* cmd_batch = app.add_subcommand("batch", "evaluate a file, one expression per line");
  cmd_batch->add_option("file", batch_path, "input file ('-' for stdin)")->required();
  add_common(cmd_batch, bf);

  auto* cmd_selftest = app.add_subcommand("selftest", "run the built-in example corpus");

  CLI11_PARSE(app, argc, argv);

  Session session;
  if (cmd_eval->parsed()) {
    if (int c = apply_flags(session, ef)) return c;
    auto r = session.run_line(expr_text);
    if (ef.json) {
      std::cout << session.json_record(expr_text, r) << "\n";
    } else if (r.tag == Session::LineOut::Tag::value ||
               r.tag == Session::LineOut::Tag::config) {
      std::cout << r.text << "\n";
    } else if (r.tag != Session::LineOut::Tag::empty) {
      std::cerr << "error: " << r.text << "\n";
    }
    return Session::exit_code(r.tag);
  }
  if (cmd_repl->parsed()) {
    if (int c = apply_flags(session, rf)) return c;
    return session.repl(std::cin, std::cout, want_color(rf));
  }
  if (cmd_batch->parsed()) {
    if (int c = apply_flags(session, bf)) return c;
    if (batch_path == "-") return session.batch(std::cin, std::cout, bf.keep_going, bf.json);
    std::ifstream in(batch_path);
    if (!in) {
      std::cerr << "error: cannot open '" << batch_path << "'\n";
      return 3;
    }
    return session.batch(in, std::cout, bf.keep_going, bf.json);
  }
  if (cmd_selftest->parsed()) return session.selftest(std::cout);
  return 0;
}
