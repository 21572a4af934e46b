#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "nsym/error.hpp"
#include "nsym/format.hpp"
#include "nsym/interval.hpp"
#include "nsym/literal.hpp"

namespace nsym::ind {

/// a + bI with literal indeterminacy I, I^n = I. Coefficients may be real or
/// complex.
template <class S>
struct BasicNeutro {
  S a{};
  S b{};
  bool operator==(const BasicNeutro&) const = default;
};

using NeutroNumber = BasicNeutro<double>;
using ComplexNeutroNumber = BasicNeutro<std::complex<double>>;

template <class S>
BasicNeutro<S> nn_add(const BasicNeutro<S>& x, const BasicNeutro<S>& y) {
  return {x.a + y.a, x.b + y.b};
}

template <class S>
BasicNeutro<S> nn_sub(const BasicNeutro<S>& x, const BasicNeutro<S>& y) {
  return {x.a - y.a, x.b - y.b};
}

template <class S>
BasicNeutro<S> nn_scale(S alpha, const BasicNeutro<S>& x) {
  return {alpha * x.a, alpha * x.b};
}

/// (a1+b1 I)(a2+b2 I) = a1 a2 + (a1 b2 + a2 b1 + b1 b2) I
template <class S>
BasicNeutro<S> nn_mul(const BasicNeutro<S>& x, const BasicNeutro<S>& y) {
  return {x.a * y.a, x.a * y.b + y.a * x.b + x.b * y.b};
}

std::string to_string(const NeutroNumber& n);

/// The partial law x # y = (x1+x2)/y1 + y2 I on coefficients in [0,1];
/// indeterminate when y1 = 0.
NeutroNumber law_sharp(const NeutroNumber& x, const NeutroNumber& y);

/// Total multiplication law on sub-indeterminacy indices {1..r}.
/// Commutativity, associativity and idempotence are checkable, not required.
class SubIndTable {
 public:
  SubIndTable(int arity, std::vector<int> cells);

  int arity() const { return arity_; }
  int mul(int j, int k) const;  // 1-based

  bool commutative() const;
  bool associative() const;
  bool idempotent() const;

  bool operator==(const SubIndTable&) const = default;

  /// The six-region preset derived from the two-set Venn diagram.
  static std::shared_ptr<const SubIndTable> venn6();
  /// The trivial one-sub-indeterminacy table I1*I1 = I1.
  static std::shared_ptr<const SubIndTable> trivial1();

 private:
  int arity_;
  std::vector<int> cells_;
};

/// a + b1 I1 + ... + br Ir over a sub-indeterminacy table of matching arity.
template <class S>
struct BasicRefined {
  S a{};
  std::vector<S> b;
  std::shared_ptr<const SubIndTable> table;
};

using RefinedNumber = BasicRefined<double>;
using ComplexRefinedNumber = BasicRefined<std::complex<double>>;

template <class S>
bool operator==(const BasicRefined<S>& x, const BasicRefined<S>& y) {
  if (x.a != y.a || x.b != y.b) return false;
  if (!x.table || !y.table) return x.table == y.table;
  return *x.table == *y.table;
}

namespace detail {

template <class S>
void check_compatible(const BasicRefined<S>& x, const BasicRefined<S>& y) {
  if (!x.table || !y.table) fail(Errc::mismatch, "refined number lacks a table");
  if (x.b.size() != y.b.size() || !(*x.table == *y.table))
    fail(Errc::mismatch, "refined numbers use different arities or tables");
  if (x.b.size() != static_cast<size_t>(x.table->arity()))
    fail(Errc::mismatch, "refined coefficient count does not match table arity");
}

}  // namespace detail

template <class S>
BasicRefined<S> rn_add(const BasicRefined<S>& x, const BasicRefined<S>& y) {
  detail::check_compatible(x, y);
  BasicRefined<S> r{x.a + y.a, x.b, x.table};
  for (size_t k = 0; k < r.b.size(); ++k) r.b[k] = x.b[k] + y.b[k];
  return r;
}

template <class S>
BasicRefined<S> rn_sub(const BasicRefined<S>& x, const BasicRefined<S>& y) {
  detail::check_compatible(x, y);
  BasicRefined<S> r{x.a - y.a, x.b, x.table};
  for (size_t k = 0; k < r.b.size(); ++k) r.b[k] = x.b[k] - y.b[k];
  return r;
}

template <class S>
BasicRefined<S> rn_scale(S alpha, const BasicRefined<S>& x) {
  BasicRefined<S> r = x;
  r.a *= alpha;
  for (auto& c : r.b) c *= alpha;
  return r;
}

/// a0 b0 + sum (a0 bk + ak b0) Ik + sum ajbk (Ij * Ik), the cross products
/// routed through the table and accumulated by resulting index.
template <class S>
BasicRefined<S> rn_mul(const BasicRefined<S>& x, const BasicRefined<S>& y) {
  detail::check_compatible(x, y);
  BasicRefined<S> r{x.a * y.a, std::vector<S>(x.b.size(), S{}), x.table};
  for (size_t k = 0; k < x.b.size(); ++k) r.b[k] = x.a * y.b[k] + y.a * x.b[k];
  for (size_t j = 0; j < x.b.size(); ++j)
    for (size_t k = 0; k < y.b.size(); ++k) {
      int m = x.table->mul(static_cast<int>(j) + 1, static_cast<int>(k) + 1);
      r.b[m - 1] += x.b[j] * y.b[k];
    }
  return r;
}

std::string to_string(const RefinedNumber& n);

/// Subset of the four atoms of the two-set {T,F} Venn diagram.
struct VennRegions {
  // bit 0: T&F, bit 1: T&!F, bit 2: !T&F, bit 3: !T&!F
  uint8_t mask = 0;

  bool operator==(const VennRegions&) const = default;
  VennRegions operator&(VennRegions o) const { return {uint8_t(mask & o.mask)}; }
  VennRegions operator|(VennRegions o) const { return {uint8_t(mask | o.mask)}; }
  VennRegions complement() const { return {uint8_t(~mask & 0xF)}; }
  std::string str() const;
};

/// Evaluates an and/or/not formula whose leaves are plain T and F to the set
/// of Venn atoms satisfying it.
VennRegions venn_regions(const lit::Formula& f);

/// Builds the r x r multiplication table whose cell (j,k) is the family
/// member matching regions(Ij) & regions(Ik). The family must be closed
/// under pairwise intersection.
SubIndTable derive_subind_table(const std::vector<lit::Formula>& defs);

/// The six defining formulas behind venn6(): contradiction T&F,
/// uncertainty T|F, exclusive-or, neither, not-T-or-not-F, and the empty
/// region T&!T.
std::vector<lit::Formula> venn6_formulas();

/// a + scale*I with I an open interval: a is x truncated toward minus
/// infinity at the given decimal digit count, and the interval brackets the
/// scaled residue outward on a one-digit-finer grid.
struct Decomposition {
  NeutroNumber number;     // b holds the scale
  Interval indeterminacy;  // open
  std::string str() const;
};

Decomposition decompose_real(double x, int determinate_digits, double scale = 1.0);

}  // namespace nsym::ind
