#pragma once

#include <string>
#include <variant>

#include "nsym/graph.hpp"
#include "nsym/hyper.hpp"
#include "nsym/indeterminacy.hpp"
#include "nsym/literal.hpp"
#include "nsym/quadruple.hpp"
#include "nsym/tif.hpp"

namespace nsym::expr {

using Value = std::variant<double,                // scalar
                           tif::Triple,           // (t,i,f)
                           tif::IntervalTriple,   // interval components
                           tif::TfPair,           // (t,f)
                           tif::Weighted,         // c(t,i,f)
                           lit::Formula,          // literals and composites
                           ind::NeutroNumber,     // a+bI
                           ind::RefinedNumber,    // a+sum bk Ik
                           ind::Decomposition,    // a+cI, I in (lo,hi)
                           ind::VennRegions,      // region sets
                           quad::QuadNumber,      // a+bT+cI+dF
                           quad::RefinedQuad,     // refined quadruple
                           hyper::NComplex,       // x0+x1h1+...
                           hyper::Dual,           // a+bg
                           hyper::Quaternion>;    // a+bi+cj+dk

std::string kind_name(const Value& v);
std::string to_string(const Value& v);

}  // namespace nsym::expr
