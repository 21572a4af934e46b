#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "nsym/expr/ast.hpp"

namespace nsym::expr {

struct Diagnostic {
  int line = 1, col = 1;
  std::string message;
  std::vector<std::string> expected;

  std::string str() const;
};

struct ParseError : std::runtime_error {
  Diagnostic diag;
  explicit ParseError(Diagnostic d) : std::runtime_error(d.str()), diag(std::move(d)) {}
};

/// Grammar (binding powers, tightest first; every operator is
/// left-associative except ->, which nests to the right):
///   unary:  ! - neut anti non
///   * /
///   + -
///   & nand
///   ^
///   |
///   ->
///   <->
/// Atoms: numbers, unit symbols, (t,i,f) and (t,f) tuples with optional
/// [lo,hi] components, number(t,i,f) weighted values, number-symbol and
/// number-(expr) juxtaposition, and f(args) calls.
Ast parse(const std::string& text);

}  // namespace nsym::expr
