#include <doctest.h>

#include <cmath>
#include <random>

#include "nsym/hyper.hpp"
#include "nsym/indeterminacy.hpp"

using namespace nsym;
using hyper::Dual;
using hyper::NComplex;
using hyper::Octonion;
using hyper::Quaternion;

namespace {

std::mt19937 rng(31415);

double small_int() {
  std::uniform_int_distribution<int> d(-5, 5);
  return d(rng);
}

}  // namespace

TEST_CASE("cyclic unit products") {
  CHECK(hyper::unit_mul(5, 3, 4) == 2);
  for (int k = 0; k < 5; ++k) CHECK(hyper::unit_mul(5, 0, k) == k);
  CHECK(hyper::unit_mul(5, {1, 2, 3}) == 1);
  CHECK_THROWS_AS(hyper::unit_mul(5, 5, 0), Error);
  CHECK_THROWS_AS(hyper::unit_mul(1, 0, 0), Error);
}

TEST_CASE("cyclic units form the full group, exhaustively") {
  for (int n = 2; n <= 64; ++n) {
    for (int a = 0; a < n; ++a) {
      CHECK(hyper::unit_mul(n, 0, a) == a);
      // every element has an inverse
      bool has_inverse = false;
      for (int b = 0; b < n; ++b)
        if (hyper::unit_mul(n, a, b) == 0) has_inverse = true;
      CHECK(has_inverse);
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          CHECK(hyper::unit_mul(n, hyper::unit_mul(n, a, b), c) ==
                hyper::unit_mul(n, a, hyper::unit_mul(n, b, c)));
    }
  }
}

TEST_CASE("hypercomplex multiplication is cyclic convolution") {
  // dimension 2: (x0 + h1 x1)^2 = (x0^2 + x1^2) + 2 x0 x1 h1
  NComplex u({3, 4});
  CHECK(hc_mul(u, u) == NComplex({25, 24}));
  NComplex id({1, 0, 0, 0, 0});
  NComplex v({2, -1, 0.5, 0, 3});
  CHECK(hc_mul(v, id) == v);
  // basis products agree with the unit law for every small dimension
  for (int n = 2; n <= 8; ++n)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        CHECK(hc_mul(NComplex::unit(n, j), NComplex::unit(n, k)) ==
              NComplex::unit(n, hyper::unit_mul(n, j, k)));
  for (int k = 0; k < 200; ++k) {
    NComplex a({small_int(), small_int(), small_int(), small_int()});
    NComplex b({small_int(), small_int(), small_int(), small_int()});
    NComplex c({small_int(), small_int(), small_int(), small_int()});
    CHECK(hc_mul(a, b) == hc_mul(b, a));
    CHECK(hc_mul(hc_mul(a, b), c) == hc_mul(a, hc_mul(b, c)));
  }
  CHECK_THROWS_AS(hc_mul(u, id), Error);
}

TEST_CASE("dual-like families") {
  using hyper::DualFamily;
  Dual nil{DualFamily::nilpotent, 2, {3}};
  Dual nil2{DualFamily::nilpotent, 5, {-1}};
  CHECK(dual_mul(nil, nil2) == Dual{DualFamily::nilpotent, 10, {13}});
  Dual idem{DualFamily::idempotent, 1, {1}};
  CHECK(dual_mul(idem, idem) == Dual{DualFamily::idempotent, 1, {3}});
  Dual anti{DualFamily::anti_idempotent, 1, {1}};
  CHECK(dual_mul(anti, anti) == Dual{DualFamily::anti_idempotent, 1, {1}});
  CHECK_THROWS_AS(dual_mul(nil, idem), Error);

  // cross units vanish in every family
  for (auto fam : {DualFamily::nilpotent, DualFamily::idempotent, DualFamily::anti_idempotent})
    for (int k = 0; k < 100; ++k) {
      Dual a{fam, small_int(), {small_int(), small_int(), small_int()}};
      Dual b{fam, small_int(), {small_int(), small_int(), small_int()}};
      Dual c{fam, small_int(), {small_int(), small_int(), small_int()}};
      CHECK(dual_mul(a, b) == dual_mul(b, a));
      CHECK(dual_mul(dual_mul(a, b), c) == dual_mul(a, dual_mul(b, c)));
    }
  CHECK(nil.str() == "2+3g");
  CHECK(Dual{DualFamily::nilpotent, 0, {1, -2}}.str() == "g1-2g2");
}

TEST_CASE("quaternions") {
  Quaternion i{{0, 1, 0, 0}}, j{{0, 0, 1, 0}}, k{{0, 0, 0, 1}}, one{{1, 0, 0, 0}};
  CHECK(quat_mul(i, j) == k);
  CHECK(quat_mul(j, i) == Quaternion{{0, 0, 0, -1}});
  CHECK(quat_mul(j, k) == i);
  CHECK(quat_mul(k, i) == j);
  CHECK(quat_mul(i, i) == Quaternion{{-1, 0, 0, 0}});
  CHECK(quat_mul(quat_mul(i, j), k) == Quaternion{{-1, 0, 0, 0}});
  CHECK(quat_mul(one, i) == i);
  CHECK(i.str() == "i");
  CHECK(Quaternion{{1, -1, 0, 2}}.str() == "1-i+2k");

  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int n = 0; n < 500; ++n) {
    Quaternion p{{u(rng), u(rng), u(rng), u(rng)}}, q{{u(rng), u(rng), u(rng), u(rng)}};
    CHECK(hyper::quat_norm(quat_mul(p, q)) ==
          doctest::Approx(hyper::quat_norm(p) * hyper::quat_norm(q)).epsilon(1e-9));
  }
  for (int n = 0; n < 300; ++n) {
    Quaternion p{{small_int(), small_int(), small_int(), small_int()}};
    Quaternion q{{small_int(), small_int(), small_int(), small_int()}};
    Quaternion r{{small_int(), small_int(), small_int(), small_int()}};
    CHECK(quat_mul(quat_mul(p, q), r) == quat_mul(p, quat_mul(q, r)));
  }
}

TEST_CASE("octonion unit table") {
  // incidence triplets, oriented cyclically
  CHECK(hyper::oct_unit_mul(1, 2) == std::pair{1, 4});   // i0 i1 = i3
  CHECK(hyper::oct_unit_mul(2, 1) == std::pair{-1, 4});  // anticommutative
  CHECK(hyper::oct_unit_mul(2, 3) == std::pair{1, 5});   // i1 i2 = i4
  CHECK(hyper::oct_unit_mul(5, 6) == std::pair{1, 1});   // i4 i5 = i0
  for (int u = 1; u <= 7; ++u) CHECK(hyper::oct_unit_mul(u, u) == std::pair{-1, 0});
  for (int u = 0; u <= 7; ++u) {
    CHECK(hyper::oct_unit_mul(0, u) == std::pair{1, u});
    CHECK(hyper::oct_unit_mul(u, 0) == std::pair{1, u});
  }
  // closure: every product of distinct imaginary units lands on another unit
  for (int u = 1; u <= 7; ++u)
    for (int v = 1; v <= 7; ++v) {
      if (u == v) continue;
      auto [s, w] = hyper::oct_unit_mul(u, v);
      CHECK((s == 1 || s == -1));
      CHECK(w >= 1);
      CHECK(w <= 7);
      auto [s2, w2] = hyper::oct_unit_mul(v, u);
      CHECK(w2 == w);
      CHECK(s2 == -s);
    }
}

TEST_CASE("octonions multiply bilinearly and are not associative") {
  auto unit = [](int k) {
    Octonion o;
    o.c[k] = 1;
    return o;
  };
  CHECK(oct_mul(unit(1), unit(2)) == unit(4));
  // (i0 i1) i2 = i3 i2 = -i5, but i0 (i1 i2) = i0 i4 = +i5
  Octonion left = oct_mul(oct_mul(unit(1), unit(2)), unit(3));
  Octonion right = oct_mul(unit(1), oct_mul(unit(2), unit(3)));
  Octonion minus_i5, plus_i5;
  minus_i5.c[6] = -1;
  plus_i5.c[6] = 1;
  CHECK(left == minus_i5);
  CHECK(right == plus_i5);
  CHECK(!(left == right));
}

TEST_CASE("indeterminacy-lifted multiplication") {
  using hyper::Neutro;
  auto dmul = [](double a, double b) { return a * b; };
  auto dadd = [](double a, double b) { return a + b; };
  // scalars reduce to the plain a+bI product
  for (int k = 0; k < 200; ++k) {
    ind::NeutroNumber a{small_int(), small_int()}, b{small_int(), small_int()};
    Neutro<double> x{a.a, a.b}, y{b.a, b.b};
    auto r = hyper::neutro_lift_mul(x, y, dmul, dadd);
    auto want = ind::nn_mul(a, b);
    CHECK(r.u == want.a);
    CHECK(r.v == want.b);
  }
  // plain product when both indeterminate parts vanish
  Neutro<Quaternion> p{Quaternion{{1, 2, 0, 0}}, {}};
  Neutro<Quaternion> q{Quaternion{{0, 1, 1, 0}}, {}};
  auto pq = hyper::neutro_lift_mul(p, q, hyper::quat_mul, hyper::quat_add);
  CHECK(pq.u == quat_mul(p.u, q.u));
  CHECK(pq.v == Quaternion{});
  // (1+I)*1 times (1+0I)*i: u1u2 = i, v-part = v1u2 = i
  Neutro<Quaternion> a{Quaternion{{1, 0, 0, 0}}, Quaternion{{1, 0, 0, 0}}};
  Neutro<Quaternion> b{Quaternion{{0, 1, 0, 0}}, {}};
  auto ab = hyper::neutro_lift_mul(a, b, hyper::quat_mul, hyper::quat_add);
  CHECK(ab.u == Quaternion{{0, 1, 0, 0}});
  CHECK(ab.v == Quaternion{{0, 1, 0, 0}});
  // associativity rides on the underlying family
  for (int k = 0; k < 200; ++k) {
    auto rq = [&] {
      return Neutro<Quaternion>{{{small_int(), small_int(), small_int(), small_int()}},
                                {{small_int(), small_int(), small_int(), small_int()}}};
    };
    auto x = rq(), y = rq(), z = rq();
    auto l = hyper::neutro_lift_mul(hyper::neutro_lift_mul(x, y, hyper::quat_mul, hyper::quat_add),
                                    z, hyper::quat_mul, hyper::quat_add);
    auto r = hyper::neutro_lift_mul(
        x, hyper::neutro_lift_mul(y, z, hyper::quat_mul, hyper::quat_add), hyper::quat_mul,
        hyper::quat_add);
    CHECK(l == r);
  }
}

TEST_CASE("neutrosophic intervals") {
  using hyper::Membership;
  hyper::NeutroInterval a{{0, 2}, std::nullopt, hyper::NeutroInterval::Side{1, {2.0, 2.7}}};
  CHECK(hyper::ni_contains(a, 1.0) == Membership::inside_determinate);
  CHECK(hyper::ni_contains(a, 2.5) == Membership::inside_indeterminate);
  CHECK(hyper::ni_contains(a, 3.0) == Membership::outside);
  CHECK(hyper::ni_contains(a, std::sqrt(7.0)) == Membership::inside_indeterminate);
  // the same set written with a scaled part {10I}, I = (0.20, 0.27)
  hyper::NeutroInterval b{{0, 2}, std::nullopt, hyper::NeutroInterval::Side{10, {0.20, 0.27}}};
  CHECK(hyper::ni_contains(b, std::sqrt(7.0)) == Membership::inside_indeterminate);
  CHECK(hyper::ni_contains(b, 2.8) == Membership::outside);
  hyper::NeutroInterval c{{0, 1}, hyper::NeutroInterval::Side{1, {-0.5, 0.0}}, std::nullopt};
  CHECK(hyper::ni_contains(c, -0.2) == Membership::inside_indeterminate);
  CHECK(c.str() == "{I=(-0.5,0)} u [0,1]");
}

TEST_CASE("linguistic numbers validate their range") {
  CHECK(hyper::ling_valid({6, 2, 1, {0.1, 0.4}}));
  CHECK(!hyper::ling_valid({3, 3, 1, {0.5, 1.0}}));
  CHECK(hyper::ling_valid({4, 3, 0, {-9, 9}}));
  // negative scale flips the interval
  CHECK(hyper::ling_valid({4, 2, -1, {0.0, 0.5}}));
  CHECK(!hyper::ling_valid({4, 0, -1, {0.0, 0.5}}));
  // interval-style numbers check both ends
  CHECK(hyper::ling_valid({6, 2, 1, {0.1, 0.4}}, {6, 4, 1, {0.1, 0.4}}));
  CHECK(!hyper::ling_valid({6, 2, 1, {0.1, 0.4}}, {6, 6, 1, {0.1, 0.4}}));
}
