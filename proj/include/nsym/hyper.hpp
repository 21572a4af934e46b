#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nsym/error.hpp"
#include "nsym/interval.hpp"

namespace nsym::hyper {

/// Unit product h_j h_k = h_{(j+k) mod n}.
int unit_mul(int n, int j, int k);
int unit_mul(int n, const std::vector<int>& js);

/// x0 + h1 x1 + ... + h_{n-1} x_{n-1} with cyclic units (h0 = 1).
struct NComplex {
  std::vector<double> x;

  explicit NComplex(std::vector<double> coeffs);
  static NComplex unit(int n, int j);
  int dim() const { return static_cast<int>(x.size()); }
  bool operator==(const NComplex&) const = default;
  std::string str() const;
};

NComplex hc_add(const NComplex& u, const NComplex& v);
/// Cyclic convolution of the coefficient vectors.
NComplex hc_mul(const NComplex& u, const NComplex& v);

/// g^2 = 0 (dual), g^2 = g (special dual), g^2 = -g (special quasi dual);
/// in every family g_j g_k = 0 for j != k.
enum class DualFamily { nilpotent, idempotent, anti_idempotent };

std::string family_name(DualFamily f);

struct Dual {
  DualFamily family = DualFamily::nilpotent;
  double a = 0;
  std::vector<double> b;  // coefficients of g1..g_{n-1}

  bool operator==(const Dual&) const = default;
  std::string str() const;
};

Dual dual_add(const Dual& x, const Dual& y);
Dual dual_mul(const Dual& x, const Dual& y);

struct Quaternion {
  std::array<double, 4> c{};  // 1, i, j, k

  bool operator==(const Quaternion&) const = default;
  std::string str() const;
};

Quaternion quat_add(const Quaternion& p, const Quaternion& q);
Quaternion quat_mul(const Quaternion& p, const Quaternion& q);
double quat_norm(const Quaternion& p);

struct Octonion {
  std::array<double, 8> c{};  // 1, i0..i6

  bool operator==(const Octonion&) const = default;
};

/// Product of basis units (0 = the real unit, 1..7 = i0..i6) as
/// (sign, index). Each incidence triplet is oriented cyclically like the
/// quaternion (i, j, k); imaginary squares are -1.
std::pair<int, int> oct_unit_mul(int u, int v);
Octonion oct_add(const Octonion& p, const Octonion& q);
Octonion oct_mul(const Octonion& p, const Octonion& q);

/// u + vI over any family with + and *; I^2 = I.
template <class X>
struct Neutro {
  X u{}, v{};
  bool operator==(const Neutro&) const = default;
};

template <class X, class Mul, class Add>
Neutro<X> neutro_lift_mul(const Neutro<X>& x, const Neutro<X>& y, Mul mul, Add add) {
  return {mul(x.u, y.u), add(add(mul(x.u, y.v), mul(x.v, y.u)), mul(x.v, y.v))};
}

/// [a,b] plus optional indeterminate ends {c I} where I is an open interval
/// scaled by c.
struct NeutroInterval {
  Interval determinate;
  struct Side {
    double c = 1.0;
    Interval part;  // open
    Interval span() const;  // c * part, normalized lo <= hi
  };
  std::optional<Side> left, right;

  std::string str() const;
};

enum class Membership { inside_determinate, inside_indeterminate, outside };

Membership ni_contains(const NeutroInterval& a, double x);

/// Label expression L_{j+aI} over labels L0..Lp with I a real interval.
struct Linguistic {
  int p = 1;    // largest label index
  double j = 0;
  double a = 0;
  Interval i;
};

/// 0 <= min{j+aI} and max{j+aI} <= p.
bool ling_valid(const Linguistic& n);
/// Interval-style number: both ends must validate.
bool ling_valid(const Linguistic& lo, const Linguistic& hi);

}  // namespace nsym::hyper
