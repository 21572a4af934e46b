#pragma once

#include <stdexcept>
#include <string>

namespace nsym {

enum class Errc {
  domain,         // value outside its admissible range
  undefined,      // the algebra leaves this operation undefined (e.g. I/I)
  indeterminate,  // a partial law hit its indeterminate case
  mismatch,       // arity / alphabet / family mismatch between operands
  unsupported,    // representable value with no operator semantics
  suborder,       // refined order inconsistent with the coarse prevalence
  bad_table,      // malformed or non-derivable operator table
  unknown_symbol,
  io,
};

struct Error : std::runtime_error {
  Errc code;
  Error(Errc c, const std::string& what) : std::runtime_error(what), code(c) {}
};

[[noreturn]] inline void fail(Errc c, const std::string& what) {
  throw Error(c, what);
}

}  // namespace nsym
