#include <doctest.h>

#include <cmath>
#include <random>

#include "nsym/tif.hpp"

using namespace nsym;
using tif::Triple;

namespace {

constexpr double kTol = 1e-12;

bool near(const Triple& a, const Triple& b) {
  return std::fabs(a.t - b.t) <= kTol && std::fabs(a.i - b.i) <= kTol &&
         std::fabs(a.f - b.f) <= kTol;
}

std::mt19937 rng(20150607);

Triple random_triple() {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return {u(rng), u(rng), u(rng)};
}

// t+i+f = 1, the domain where the multiplicative conjunction never saturates
Triple random_normalized_triple() {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double a = u(rng), b = u(rng), c = u(rng);
  double s = a + b + c;
  if (s == 0) return {1, 0, 0};
  return {a / s, b / s, c / s};
}

}  // namespace

TEST_CASE("triple validation") {
  CHECK_THROWS_AS(Triple(1.2, 0, 0), Error);
  CHECK_THROWS_AS(Triple(0, -0.1, 0), Error);
  CHECK_NOTHROW(Triple(1, 1, 1));  // paraconsistent sums are fine
  CHECK(Triple(0.7, 0.2, 0.3).str() == "(0.7,0.2,0.3)");
}

TEST_CASE("negation variants") {
  CHECK(tif::negate(tif::NegVariant::swap_tf, {0.7, 0.2, 0.3}) == Triple{0.3, 0.2, 0.7});
  CHECK(near(tif::negate(tif::NegVariant::swap_tf_flip_i, {0.3, 0.4, 0.2}),
             {0.2, 0.6, 0.3}));
  CHECK(tif::negate(tif::NegVariant::complement_all, {1, 0, 0}) == Triple{0, 1, 1});
  CHECK(tif::negate(tif::NegVariant::complement_tf, {0.3, 0.4, 0.2}) ==
        Triple{0.7, 0.4, 0.8});

  // the swap variants are involutions
  for (int k = 0; k < 100; ++k) {
    Triple a = random_triple();
    for (auto v : {tif::NegVariant::swap_tf, tif::NegVariant::complement_all,
                   tif::NegVariant::complement_tf})
      CHECK(near(tif::negate(v, tif::negate(v, a)), a));
  }
}

TEST_CASE("simplest conjunction and disjunction") {
  auto conj = tif::ConjVariant::min_max_max();
  auto disj = tif::DisjVariant::max_min_min();
  CHECK(tif::conjoin(conj, {0.6, 0.1, 0.2}, {0.7, 0.2, 0.3}) == Triple{0.6, 0.2, 0.3});
  CHECK(tif::conjoin(conj, {0.6, 0.1, 0.2}, {0.3, 0.2, 0.7}) == Triple{0.3, 0.2, 0.7});
  CHECK(tif::disjoin(disj, {0.2, 0.4, 0.3}, {0.7, 0.1, 0.4}) == Triple{0.7, 0.1, 0.3});
  CHECK(tif::disjoin(disj, {0.1, 0.2, 0.9}, {0.6, 0.2, 0.4}) == Triple{0.6, 0.2, 0.4});
  for (int k = 0; k < 50; ++k) {
    Triple a = random_triple();
    CHECK(tif::conjoin(conj, a, {1, 0, 0}) == a);  // the conjunction unit
    CHECK(tif::disjoin(disj, a, {0, 1, 1}) == a);  // the disjunction unit
  }
}

TEST_CASE("fuzzy norms and conorms") {
  using tif::Conorm;
  using tif::Norm;
  CHECK(tif::fuzzy_and(Norm::lukasiewicz, 0.6, 0.7) == doctest::Approx(0.3).epsilon(kTol));
  CHECK(tif::fuzzy_or(Conorm::bounded_sum, 0.6, 0.7) == 1.0);
  CHECK(tif::fuzzy_and(Norm::product, 0.5, 0.4) == doctest::Approx(0.2));
  CHECK(tif::fuzzy_or(Conorm::prob_sum, 0.5, 0.4) == doctest::Approx(0.7));

  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (auto n : {Norm::min, Norm::product, Norm::lukasiewicz}) {
    for (int k = 0; k < 2000; ++k) {
      double a = u(rng), b = u(rng), c = u(rng);
      double ab = tif::fuzzy_and(n, a, b);
      CHECK(ab >= 0.0);
      CHECK(ab <= 1.0);
      CHECK(ab == tif::fuzzy_and(n, b, a));
      CHECK(tif::fuzzy_and(n, tif::fuzzy_and(n, a, b), c) ==
            doctest::Approx(tif::fuzzy_and(n, a, tif::fuzzy_and(n, b, c))).epsilon(kTol));
      CHECK(tif::fuzzy_and(n, a, 1.0) == doctest::Approx(a));
      // monotone in each slot
      double a2 = std::min(1.0, a + 0.1);
      CHECK(tif::fuzzy_and(n, a2, b) >= ab - kTol);
    }
  }
  for (auto c : {Conorm::max, Conorm::prob_sum, Conorm::bounded_sum}) {
    for (int k = 0; k < 2000; ++k) {
      double a = u(rng), b = u(rng), d = u(rng);
      double ab = tif::fuzzy_or(c, a, b);
      CHECK(ab >= 0.0);
      CHECK(ab <= 1.0);
      CHECK(ab == tif::fuzzy_or(c, b, a));
      CHECK(tif::fuzzy_or(c, tif::fuzzy_or(c, a, b), d) ==
            doctest::Approx(tif::fuzzy_or(c, a, tif::fuzzy_or(c, b, d))).epsilon(kTol));
      CHECK(tif::fuzzy_or(c, a, 0.0) == doctest::Approx(a));
      double a2 = std::min(1.0, a + 0.1);
      CHECK(tif::fuzzy_or(c, a2, b) >= ab - kTol);
    }
  }
}

TEST_CASE("fuzzy implication case splits") {
  using tif::Impl;
  auto I = [](Impl k, double x, double y) { return tif::fuzzy_implies(k, x, y); };

  CHECK(I(Impl::yager, 0, 0) == 1.0);
  CHECK(I(Impl::rescher, 0.4, 0.4) == 1.0);
  CHECK(I(Impl::reichenbach, 0.5, 0.5) == 0.75);

  // each family's definitional branches, probed at and around the boundaries
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto samples = [&] {
    std::vector<std::pair<double, double>> s = {{0, 0}, {0, 1}, {1, 0}, {1, 1},
                                                {0.5, 0.5}, {0, 0.5}, {0.5, 0},
                                                {1, 0.5}, {0.5, 1}};
    for (int k = 0; k < 500; ++k) s.push_back({u(rng), u(rng)});
    return s;
  }();
  for (auto [x, y] : samples) {
    CHECK(I(Impl::fodor, x, y) == (x <= y ? 1.0 : std::max(1.0 - x, y)));
    CHECK(I(Impl::weber, x, y) == (x < 1.0 ? 1.0 : y));
    CHECK(I(Impl::yager, x, y) == ((x == 0 && y == 0) ? 1.0 : std::pow(y, x)));
    CHECK(I(Impl::goguen, x, y) == (x <= y ? 1.0 : y / x));
    CHECK(I(Impl::rescher, x, y) == (x <= y ? 1.0 : 0.0));
    CHECK(I(Impl::kleene_dienes, x, y) == std::max(1.0 - x, y));
    CHECK(I(Impl::reichenbach, x, y) == 1.0 - x + x * y);
    CHECK(I(Impl::goedel, x, y) == (x <= y ? 1.0 : y));
    CHECK(I(Impl::lukasiewicz, x, y) == std::min(1.0, 1.0 - x + y));
    for (auto k : {Impl::fodor, Impl::weber, Impl::yager, Impl::goguen, Impl::rescher,
                   Impl::kleene_dienes, Impl::reichenbach, Impl::goedel, Impl::lukasiewicz}) {
      double v = I(k, x, y);
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
  }
}

TEST_CASE("pairwise implication on (t,f) pairs") {
  using tif::TfPair;
  // expansions fixed by hand before implementing
  CHECK(tif::if_implies({0, 1}, {0.4, 0.6}) == TfPair{1, 0.6});
  CHECK(tif::if_implies({1, 0}, {0, 1}) == TfPair{0, 0});
  TfPair r = tif::if_implies({0.3, 0.2}, {0.7, 0.4});
  CHECK(r.t == doctest::Approx(0.6).epsilon(kTol));
  CHECK(r.f == doctest::Approx(0.4).epsilon(kTol));
}

TEST_CASE("implication classes on triples") {
  tif::ImplClass neg_or;  // defaults: swap_tf negation, <max,min,min> disjunction
  CHECK(tif::implies(neg_or, {0.3, 0.4, 0.2}, {0.7, 0.1, 0.4}) == Triple{0.7, 0.1, 0.3});
  CHECK(tif::implies(neg_or, {1, 0, 0}, {1, 0, 0}) == Triple{1, 0, 0});

  tif::ImplClass in4{tif::ImplClass::Kind::in4, tif::Impl::lukasiewicz};
  CHECK(near(tif::implies(in4, {0.6, 0.2, 0.4}, {0.8, 0.4, 0.2}), {1.0, 0.3, 0.3}));

  tif::ImplClass in1{tif::ImplClass::Kind::in1, tif::Impl::fodor};
  CHECK(near(tif::implies(in1, {0.6, 0.2, 0.4}, {0.8, 0.4, 0.2}), {1.0, 0.2, 0.2}));
  tif::ImplClass in2{tif::ImplClass::Kind::in2, tif::Impl::fodor};
  CHECK(near(tif::implies(in2, {0.6, 0.2, 0.4}, {0.8, 0.4, 0.2}), {1.0, 0.4, 0.2}));
  tif::ImplClass in3{tif::ImplClass::Kind::in3, tif::Impl::goedel};
  CHECK(near(tif::implies(in3, {0.6, 0.2, 0.4}, {0.8, 0.4, 0.2}), {1.0, 0.3, 0.2}));
}

TEST_CASE("multiplicative conjunction") {
  CHECK(tif::mul_conjoin({1, 0, 0}, {0.7, 0.2, 0.3}) == Triple{0.7, 0.2, 0.3});
  CHECK(near(tif::mul_conjoin({0.5, 0.5, 0}, {0.5, 0.5, 0}), {0.25, 0.75, 0}));
  // inputs summing to 1 keep summing to 1
  for (int k = 0; k < 1000; ++k) {
    Triple a = random_normalized_triple(), b = random_normalized_triple();
    Triple r = tif::mul_conjoin(a, b);
    CHECK(r.t + r.i + r.f == doctest::Approx(1.0).epsilon(1e-9));
  }
  // super-normalized inputs saturate instead of leaving [0,1]
  Triple big = tif::mul_conjoin({1, 1, 1}, {1, 1, 1});
  CHECK(big == Triple{1, 1, 1});
}

TEST_CASE("contradiction degree is the scaled L1 metric") {
  CHECK(tif::contradiction_degree({1, 0, 0}, {0, 1, 1}) == 1.0);
  Triple a = random_triple();
  CHECK(tif::contradiction_degree(a, a) == 0.0);
  CHECK(tif::contradiction_degree({0.6, 0.1, 0.2}, {0.7, 0.2, 0.3}) ==
        doctest::Approx(0.1).epsilon(kTol));
  for (int k = 0; k < 1000; ++k) {
    Triple x = random_triple(), y = random_triple(), z = random_triple();
    double xy = tif::contradiction_degree(x, y);
    CHECK(xy >= 0.0);
    CHECK(xy <= 1.0);
    CHECK(xy == tif::contradiction_degree(y, x));
    CHECK(tif::contradiction_degree(x, z) <=
          xy + tif::contradiction_degree(y, z) + kTol);
    if (xy == 0.0) CHECK(x == y);
  }
}

TEST_CASE("operators stay inside [0,1] on random input") {
  // the closure sweep the module promises: every family, arbitrary triples
  auto valid = [](const Triple& r) {
    return r.t >= 0 && r.t <= 1 && r.i >= 0 && r.i <= 1 && r.f >= 0 && r.f <= 1;
  };
  using tif::Conorm;
  using tif::Norm;
  std::vector<tif::ConjVariant> conjs;
  std::vector<tif::DisjVariant> disjs;
  for (int form = 1; form <= 6; ++form)
    for (auto n : {Norm::min, Norm::product, Norm::lukasiewicz})
      for (auto c : {Conorm::max, Conorm::prob_sum, Conorm::bounded_sum}) {
        conjs.push_back({form, n, c});
        disjs.push_back({form, c, n});
      }
  for (int k = 0; k < 10000; ++k) {
    Triple a = random_triple(), b = random_triple();
    const auto& cv = conjs[k % conjs.size()];
    const auto& dv = disjs[k % disjs.size()];
    CHECK(valid(tif::conjoin(cv, a, b)));
    CHECK(valid(tif::disjoin(dv, a, b)));
    CHECK(valid(tif::mul_conjoin(a, b)));
    for (auto v : {tif::NegVariant::swap_tf, tif::NegVariant::swap_tf_flip_i,
                   tif::NegVariant::complement_all, tif::NegVariant::complement_tf})
      CHECK(valid(tif::negate(v, a)));
    tif::ImplClass ic;
    ic.kind = static_cast<tif::ImplClass::Kind>(k % 5);
    ic.impl = static_cast<tif::Impl>(k % 9);
    CHECK(valid(tif::implies(ic, a, b)));
  }
}

TEST_CASE("conjunction-disjunction duality") {
  // The de-Morgan pairing of <min,max,max> with <max,min,min> holds on every
  // slot only for the i-flipping negation <f,1-i,t>; the plain swap <f,i,t>
  // matches on the t and f slots but turns max i into min i.
  auto conj = tif::ConjVariant::min_max_max();
  auto disj = tif::DisjVariant::max_min_min();
  for (int k = 0; k < 1000; ++k) {
    Triple a = random_triple(), b = random_triple();
    auto flip = tif::NegVariant::swap_tf_flip_i;
    CHECK(near(tif::disjoin(disj, tif::negate(flip, a), tif::negate(flip, b)),
               tif::negate(flip, tif::conjoin(conj, a, b))));
    auto swap = tif::NegVariant::swap_tf;
    Triple lhs = tif::disjoin(disj, tif::negate(swap, a), tif::negate(swap, b));
    Triple rhs = tif::negate(swap, tif::conjoin(conj, a, b));
    CHECK(lhs.t == rhs.t);
    CHECK(lhs.f == rhs.f);
  }
  // witness that the plain swap cannot satisfy the i slot
  Triple a{0.5, 0.2, 0.5}, b{0.5, 0.8, 0.5};
  auto swap = tif::NegVariant::swap_tf;
  CHECK(tif::disjoin(disj, tif::negate(swap, a), tif::negate(swap, b)).i == 0.2);
  CHECK(tif::negate(swap, tif::conjoin(conj, a, b)).i == 0.8);
}

TEST_CASE("weighted max/min semigroup") {
  using tif::Weighted;
  Weighted three{3, {1, 0, 0}}, four{4, {1, 0, 0}}, nine{9, {0.7, 0.1, 0.3}};
  CHECK(tif::star(three, nine) == nine);
  CHECK(tif::star(three, four) == four);
  CHECK(tif::star(nine, nine) == nine);
  CHECK(three.str() == "3(1,0,0)");

  for (int k = 0; k < 1000; ++k) {
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    Weighted x{u(rng), random_triple()}, y{u(rng), random_triple()}, z{u(rng), random_triple()};
    CHECK(tif::star(x, x) == x);
    CHECK(tif::star(x, y) == tif::star(y, x));
    CHECK(tif::star(tif::star(x, y), z) == tif::star(x, tif::star(y, z)));
  }
  // 3(1,0,0) is a unit on the worked example set
  for (const Weighted& m : {four, nine}) CHECK(tif::star(three, m) == m);
}
