#include "nsym/hyper.hpp"

#include <algorithm>
#include <cmath>

#include "nsym/format.hpp"

namespace nsym::hyper {

namespace {

void check_dim(int n) {
  if (n < 2) fail(Errc::domain, "hypercomplex dimension must be >= 2");
}

}  // namespace

int unit_mul(int n, int j, int k) {
  check_dim(n);
  if (j < 0 || j >= n || k < 0 || k >= n)
    fail(Errc::domain, "unit index outside 0.." + std::to_string(n - 1));
  return (j + k) % n;
}

int unit_mul(int n, const std::vector<int>& js) {
  check_dim(n);
  int acc = 0;
  for (int j : js) acc = unit_mul(n, acc, j);
  return acc;
}

NComplex::NComplex(std::vector<double> coeffs) : x(std::move(coeffs)) { check_dim(dim()); }

NComplex NComplex::unit(int n, int j) {
  check_dim(n);
  if (j < 0 || j >= n) fail(Errc::domain, "unit index outside 0.." + std::to_string(n - 1));
  std::vector<double> c(n, 0.0);
  c[j] = 1.0;
  return NComplex(std::move(c));
}

std::string NComplex::str() const {
  std::string s;
  bool first = true;
  append_term(s, x[0], "", first);
  for (int k = 1; k < dim(); ++k) append_term(s, x[k], "h" + std::to_string(k), first);
  return finish_terms(std::move(s));
}

NComplex hc_add(const NComplex& u, const NComplex& v) {
  if (u.dim() != v.dim()) fail(Errc::mismatch, "hypercomplex dimensions differ");
  NComplex r = u;
  for (int k = 0; k < r.dim(); ++k) r.x[k] += v.x[k];
  return r;
}

NComplex hc_mul(const NComplex& u, const NComplex& v) {
  if (u.dim() != v.dim()) fail(Errc::mismatch, "hypercomplex dimensions differ");
  const int n = u.dim();
  NComplex r(std::vector<double>(n, 0.0));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) r.x[(j + k) % n] += u.x[j] * v.x[k];
  return r;
}

std::string family_name(DualFamily f) {
  switch (f) {
    case DualFamily::nilpotent: return "nilpotent";
    case DualFamily::idempotent: return "idempotent";
    case DualFamily::anti_idempotent: return "anti-idempotent";
  }
  return "?";
}

std::string Dual::str() const {
  std::string s;
  bool first = true;
  append_term(s, a, "", first);
  for (size_t k = 0; k < b.size(); ++k) {
    std::string unit = "g";
    if (b.size() > 1) unit += std::to_string(k + 1);
    append_term(s, b[k], unit, first);
  }
  return finish_terms(std::move(s));
}

Dual dual_add(const Dual& x, const Dual& y) {
  if (x.family != y.family || x.b.size() != y.b.size())
    fail(Errc::mismatch, "dual numbers of different family or dimension");
  Dual r = x;
  r.a += y.a;
  for (size_t k = 0; k < r.b.size(); ++k) r.b[k] += y.b[k];
  return r;
}

Dual dual_mul(const Dual& x, const Dual& y) {
  if (x.family != y.family || x.b.size() != y.b.size())
    fail(Errc::mismatch, "dual numbers of different family or dimension");
  double eps = 0.0;
  if (x.family == DualFamily::idempotent) eps = 1.0;
  if (x.family == DualFamily::anti_idempotent) eps = -1.0;
  Dual r = x;
  r.a = x.a * y.a;
  for (size_t k = 0; k < r.b.size(); ++k)
    r.b[k] = x.a * y.b[k] + y.a * x.b[k] + eps * x.b[k] * y.b[k];
  return r;
}

std::string Quaternion::str() const {
  std::string s;
  bool first = true;
  const char* units[4] = {"", "i", "j", "k"};
  for (int k = 0; k < 4; ++k) append_term(s, c[k], units[k], first);
  return finish_terms(std::move(s));
}

Quaternion quat_add(const Quaternion& p, const Quaternion& q) {
  Quaternion r;
  for (int k = 0; k < 4; ++k) r.c[k] = p.c[k] + q.c[k];
  return r;
}

Quaternion quat_mul(const Quaternion& p, const Quaternion& q) {
  const double a1 = p.c[0], b1 = p.c[1], c1 = p.c[2], d1 = p.c[3];
  const double a2 = q.c[0], b2 = q.c[1], c2 = q.c[2], d2 = q.c[3];
  return {{a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
           a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
           a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
           a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2}};
}

double quat_norm(const Quaternion& p) {
  return std::sqrt(p.c[0] * p.c[0] + p.c[1] * p.c[1] + p.c[2] * p.c[2] + p.c[3] * p.c[3]);
}

namespace {

// The seven incidence triplets of imaginary units (by i-subscript 0..6); each
// behaves cyclically like (i, j, k).
constexpr int kTriplets[7][3] = {{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6},
                                 {4, 5, 0}, {5, 6, 1}, {6, 0, 2}};

struct OctTable {
  int sign[8][8] = {};
  int index[8][8] = {};

  OctTable() {
    for (int u = 0; u < 8; ++u) {
      sign[0][u] = sign[u][0] = 1;
      index[0][u] = index[u][0] = u;
    }
    for (int u = 1; u < 8; ++u) {
      sign[u][u] = -1;
      index[u][u] = 0;
    }
    auto set = [&](int a, int b, int c) {
      sign[a + 1][b + 1] = 1;
      index[a + 1][b + 1] = c + 1;
      sign[b + 1][a + 1] = -1;
      index[b + 1][a + 1] = c + 1;
    };
    for (const auto& t : kTriplets) {
      set(t[0], t[1], t[2]);
      set(t[1], t[2], t[0]);
      set(t[2], t[0], t[1]);
    }
  }
};

const OctTable& oct_table() {
  static const OctTable t;
  return t;
}

}  // namespace

std::pair<int, int> oct_unit_mul(int u, int v) {
  if (u < 0 || u > 7 || v < 0 || v > 7) fail(Errc::domain, "octonion unit index outside 0..7");
  const auto& t = oct_table();
  return {t.sign[u][v], t.index[u][v]};
}

Octonion oct_add(const Octonion& p, const Octonion& q) {
  Octonion r;
  for (int k = 0; k < 8; ++k) r.c[k] = p.c[k] + q.c[k];
  return r;
}

Octonion oct_mul(const Octonion& p, const Octonion& q) {
  const auto& t = oct_table();
  Octonion r;
  for (int u = 0; u < 8; ++u)
    for (int v = 0; v < 8; ++v) r.c[t.index[u][v]] += t.sign[u][v] * p.c[u] * q.c[v];
  return r;
}

Interval NeutroInterval::Side::span() const {
  double lo = c * part.lo, hi = c * part.hi;
  if (lo > hi) std::swap(lo, hi);
  return {lo, hi};
}

std::string NeutroInterval::str() const {
  std::string s;
  auto side = [](const Side& p) {
    std::string t = "{";
    if (p.c != 1.0) t += fmt_real(p.c);
    t += "I=";
    t += fmt_interval(p.part, true);
    t += "}";
    return t;
  };
  if (left) s += side(*left) + " u ";
  s += fmt_interval(determinate, false);
  if (right) s += " u " + side(*right);
  return s;
}

Membership ni_contains(const NeutroInterval& a, double x) {
  if (a.determinate.contains_closed(x)) return Membership::inside_determinate;
  if (a.left && a.left->span().contains_open(x)) return Membership::inside_indeterminate;
  if (a.right && a.right->span().contains_open(x)) return Membership::inside_indeterminate;
  return Membership::outside;
}

bool ling_valid(const Linguistic& n) {
  double lo = n.j + std::min(n.a * n.i.lo, n.a * n.i.hi);
  double hi = n.j + std::max(n.a * n.i.lo, n.a * n.i.hi);
  return 0.0 <= lo && hi <= static_cast<double>(n.p);
}

bool ling_valid(const Linguistic& lo, const Linguistic& hi) {
  return ling_valid(lo) && ling_valid(hi);
}

}  // namespace nsym::hyper
