#pragma once

#include <iosfwd>
#include <string>

#include "nsym/expr/config.hpp"
#include "nsym/expr/value.hpp"

namespace nsym::expr {

/// One evaluation context: a configuration plus the command loop around it.
/// Lines starting with ':' are configuration commands, everything else is an
/// expression.
class Session {
 public:
  EvalConfig cfg;

  struct LineOut {
    enum class Tag { empty, value, config, parse_error, eval_error, config_error };
    Tag tag = Tag::empty;
    std::string text;        // value text, confirmation, or error message
    std::string value_kind;  // set for Tag::value
  };

  LineOut run_line(const std::string& line);

  /// {input, value_kind, value, config_fingerprint} (error records carry
  /// error_kind/error instead of value fields).
  std::string json_record(const std::string& input, const LineOut& out) const;

  /// exit codes: 0 ok, 1 parse error, 2 evaluation error, 3 config error;
  /// the first error wins. keep_going evaluates every line regardless.
  int batch(std::istream& in, std::ostream& out, bool keep_going, bool json);

  int repl(std::istream& in, std::ostream& out, bool color);

  /// Evaluates the built-in example corpus; returns 0 when everything
  /// matches.
  int selftest(std::ostream& out);

  static int exit_code(LineOut::Tag tag);

 private:
  LineOut command(const std::string& line);
};

}  // namespace nsym::expr
