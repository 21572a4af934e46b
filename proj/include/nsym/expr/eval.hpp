#pragma once

#include "nsym/expr/ast.hpp"
#include "nsym/expr/config.hpp"
#include "nsym/expr/value.hpp"

namespace nsym::expr {

/// Evaluates against the configuration. Domain violations, undefined
/// operations and type mismatches surface as nsym::Error.
Value eval(const Ast& a, const EvalConfig& cfg);

}  // namespace nsym::expr
