#pragma once

#include <string>

#include "nsym/interval.hpp"

namespace nsym {

// Shortest decimal string that round-trips to the same double ("0.6", "1", "-2.5").
std::string fmt_real(double x);

// Appends "+3I1", "-I", "+0.5T" style terms; coefficient 0 appends nothing,
// coefficient +/-1 drops the "1". `first` tracks whether a leading '+' is needed.
void append_term(std::string& out, double coef, const std::string& unit, bool& first);

// Finishes a sign-folded sum: empty accumulations become "0".
std::string finish_terms(std::string out);

std::string fmt_interval(const Interval& iv, bool open);

}  // namespace nsym
