#include "nsym/format.hpp"

#include <cmath>
#include <cstdio>

namespace nsym {

std::string fmt_real(double x) {
  if (x == 0.0) return "0";  // also normalizes -0
  // 12 significant digits: well past anything the algebra produces, while
  // hiding one-ulp float noise like 0.09999999999999998
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

void append_term(std::string& out, double coef, const std::string& unit, bool& first) {
  if (coef == 0.0) return;
  if (unit.empty()) {
    if (!first && coef >= 0) out += '+';
    out += fmt_real(coef);
  } else if (coef == 1.0) {
    if (!first) out += '+';
    out += unit;
  } else if (coef == -1.0) {
    out += '-';
    out += unit;
  } else {
    if (!first && coef >= 0) out += '+';
    out += fmt_real(coef);
    out += unit;
  }
  first = false;
}

std::string finish_terms(std::string out) {
  if (out.empty()) return "0";
  return out;
}

std::string fmt_interval(const Interval& iv, bool open) {
  std::string s;
  s += open ? '(' : '[';
  s += fmt_real(iv.lo);
  s += ',';
  s += fmt_real(iv.hi);
  s += open ? ')' : ']';
  return s;
}

}  // namespace nsym
