#include <doctest.h>

#include <random>

#include "nsym/quadruple.hpp"
#include "support/oracles.hpp"

using namespace nsym;
using lit::Lit;
using lit::PrevOrder;
using quad::QuadNumber;
using quad::RefinedQuad;

namespace {

std::mt19937 rng(77123);

double small_int() {
  std::uniform_int_distribution<int> d(-5, 5);
  return d(rng);
}

double uniform() {
  std::uniform_real_distribution<double> d(-10.0, 10.0);
  return d(rng);
}

QuadNumber random_quad(bool integers) {
  auto g = [&] { return integers ? small_int() : uniform(); };
  return {g(), g(), g(), g()};
}

// the independent expansion over named units
QuadNumber oracle_mul(const std::vector<std::string>& chain, const QuadNumber& x,
                      const QuadNumber& y) {
  using test::Term;
  auto terms = [](const QuadNumber& q) {
    return std::vector<Term>{{q.a, ""}, {q.b, "T"}, {q.c, "I"}, {q.d, "F"}};
  };
  auto m = test::absorb_product(chain, terms(x), terms(y));
  return {m[""], m["T"], m["I"], m["F"]};
}

const std::vector<std::string> kTIF = {"T", "I", "F"};
const std::vector<std::string> kFIT = {"F", "I", "T"};

}  // namespace

TEST_CASE("quadruple addition, subtraction, scaling") {
  QuadNumber a{1, 2, 3, 4}, b{1, 0, 1, -4};
  CHECK(quad::nq_add(a, b) == QuadNumber{2, 2, 4, 0});
  CHECK(quad::nq_sub(a, b) == QuadNumber{0, 2, 2, 8});
  CHECK(quad::nq_scale(0.0, a) == QuadNumber{0, 0, 0, 0});
  // mT + nT = (m+n)T
  CHECK(quad::nq_add(QuadNumber{0, 3, 0, 0}, QuadNumber{0, 4, 0, 0}) ==
        QuadNumber{0, 7, 0, 0});
  CHECK(QuadNumber{2, 2, 4, 0}.str() == "2+2T+4I");
  CHECK(QuadNumber{0, 0, 0, 0}.str() == "0");
  CHECK(QuadNumber{0, -1, 0, 1.5}.str() == "-T+1.5F");
}

TEST_CASE("absorbance picks the prevailing literal") {
  auto order = PrevOrder::parse("T1>T2>T3>I>F1>F2");
  auto L = [](const char* s) { return *lit::parse_lit(s); };
  CHECK(quad::absorb(order, L("T2"), L("T3")) == L("T2"));
  CHECK(quad::absorb(order, L("T1"), L("F1")) == L("T1"));
  CHECK(quad::absorb(order, L("I"), L("F2")) == L("I"));
  CHECK(quad::absorb(order, L("T2"), L("F1")) == L("T2"));
  CHECK(quad::absorb(order, {L("F2"), L("T3"), L("I")}) == L("T3"));
  CHECK(quad::absorb(order, L("I"), L("I")) == L("I"));
  CHECK_THROWS_AS(quad::absorb(order, L("T4"), L("I")), Error);
}

TEST_CASE("quadruple multiplication under both worked orders") {
  auto tif_order = PrevOrder::parse("T>I>F");
  auto fit_order = PrevOrder::parse("F>I>T");
  QuadNumber oneT{1, 1, 0, 0}, oneF{1, 0, 0, 1};
  CHECK(quad::nq_mul(tif_order, oneT, oneF) == QuadNumber{1, 2, 0, 1});
  CHECK(quad::nq_mul(fit_order, oneT, oneF) == QuadNumber{1, 1, 0, 2});
  QuadNumber q{2, -1, 3, 0.5};
  CHECK(quad::nq_mul(tif_order, QuadNumber{1, 0, 0, 0}, q) == q);

  // basis literals square to themselves under any order
  for (const char* chain : {"T>I>F", "T>F>I", "I>T>F", "I>F>T", "F>T>I", "F>I>T"}) {
    auto o = PrevOrder::parse(chain);
    CHECK(quad::nq_mul(o, {0, 1, 0, 0}, {0, 1, 0, 0}) == QuadNumber{0, 1, 0, 0});
    CHECK(quad::nq_mul(o, {0, 0, 1, 0}, {0, 0, 1, 0}) == QuadNumber{0, 0, 1, 0});
    CHECK(quad::nq_mul(o, {0, 0, 0, 1}, {0, 0, 0, 1}) == QuadNumber{0, 0, 0, 1});
  }
}

TEST_CASE("closed forms match the expansion oracle") {
  auto tif_order = PrevOrder::parse("T>I>F");
  auto fit_order = PrevOrder::parse("F>I>T");
  for (int k = 0; k < 1000; ++k) {
    QuadNumber x = random_quad(false), y = random_quad(false);
    QuadNumber et = oracle_mul(kTIF, x, y);
    QuadNumber ef = oracle_mul(kFIT, x, y);
    for (auto [got, want] : {std::pair{quad::nq_mul_closed_tif(x, y), et},
                             std::pair{quad::nq_mul(tif_order, x, y), et},
                             std::pair{quad::nq_mul_closed_fit(x, y), ef},
                             std::pair{quad::nq_mul(fit_order, x, y), ef}}) {
      CHECK(got.a == doctest::Approx(want.a).epsilon(1e-12));
      CHECK(got.b == doctest::Approx(want.b).epsilon(1e-12));
      CHECK(got.c == doctest::Approx(want.c).epsilon(1e-12));
      CHECK(got.d == doctest::Approx(want.d).epsilon(1e-12));
    }
  }
  // the I*I=I square term belongs in the I slot: a pure-I square stays I
  CHECK(quad::nq_mul_closed_tif({0, 0, 1, 0}, {0, 0, 1, 0}) == QuadNumber{0, 0, 1, 0});
}

TEST_CASE("quadruple ring laws") {
  for (const char* chain : {"T>I>F", "F>I>T", "I>T>F"}) {
    auto o = PrevOrder::parse(chain);
    for (int k = 0; k < 300; ++k) {
      QuadNumber x = random_quad(true), y = random_quad(true), z = random_quad(true);
      CHECK(quad::nq_mul(o, x, y) == quad::nq_mul(o, y, x));
      CHECK(quad::nq_mul(o, quad::nq_mul(o, x, y), z) ==
            quad::nq_mul(o, x, quad::nq_mul(o, y, z)));
      CHECK(quad::nq_mul(o, x, quad::nq_add(y, z)) ==
            quad::nq_add(quad::nq_mul(o, x, y), quad::nq_mul(o, x, z)));
    }
  }
}

TEST_CASE("refined quadruple componentwise operations") {
  quad::Alphabet al{3, 1, 2};
  RefinedQuad x = RefinedQuad::zero(al);
  x.a = 2;
  x.t = {-3, 2, 1};
  x.i = {-1};
  x.f = {5, -3};
  CHECK(x.str() == "2-3T1+2T2+T3-I+5F1-3F2");
  RefinedQuad y = RefinedQuad::zero(al);
  y.t = {1, -1, 0};
  y.i = {5};
  y.f = {-8, 5};
  auto s = quad::rnq_add(x, y);
  CHECK(s.t == std::vector<double>{-2, 1, 1});
  CHECK(s.i == std::vector<double>{4});
  CHECK(quad::rnq_sub(s, y) == x);
  CHECK(quad::rnq_scale(2.0, x).f == std::vector<double>{10, -6});
  RefinedQuad other = RefinedQuad::zero({2, 2, 2});
  CHECK_THROWS_AS(quad::rnq_add(x, other), Error);
}

TEST_CASE("refined orders validate against the alphabet") {
  quad::Alphabet al{3, 1, 2};
  CHECK_NOTHROW(quad::check_refined_order(
      quad::normalize_order(PrevOrder::parse("T1>T2>T3>I>F1>F2"), al), al));
  // interleaved classes
  CHECK_THROWS_WITH_AS(
      quad::check_refined_order(PrevOrder::parse("T1>I1>T2>T3>F1>F2"), al),
      doctest::Contains("suborder"), Error);
  // missing literal
  CHECK_THROWS_AS(quad::check_refined_order(PrevOrder::parse("T1>T2>I1>F1>F2"), al), Error);
  // foreign literal
  CHECK_THROWS_AS(
      quad::check_refined_order(PrevOrder::parse("T1>T2>T3>T4>I1>F1>F2"), al), Error);
  // bare literals resolve only for one-member classes
  CHECK(quad::normalize(Lit::I(), al) == Lit{lit::Kind::I, 1});
  CHECK_THROWS_AS(quad::normalize(Lit::T(), al), Error);
  auto def = quad::default_refined_order(al, PrevOrder::parse("F>I>T"));
  CHECK(def.str() == "F1>F2>I1>T1>T2>T3");
}

TEST_CASE("refined multiplication: the worked exercise") {
  quad::Alphabet al{3, 1, 2};
  auto order = PrevOrder::parse("T1>T2>T3>I>F1>F2");
  RefinedQuad na = RefinedQuad::zero(al);
  na.a = 2;
  na.t = {-3, 2, 1};
  na.i = {-1};
  na.f = {5, -3};
  RefinedQuad nb = RefinedQuad::zero(al);
  nb.t = {1, -1, 0};
  nb.i = {5};
  nb.f = {-8, 5};

  RefinedQuad got = quad::rnq_mul(order, na, nb);

  // the 49-term expansion, written against the independent oracle
  using test::Term;
  auto terms = [](const RefinedQuad& q) {
    std::vector<Term> ts{{q.a, ""}};
    for (size_t k = 0; k < q.t.size(); ++k) ts.push_back({q.t[k], "T" + std::to_string(k + 1)});
    for (size_t k = 0; k < q.i.size(); ++k) ts.push_back({q.i[k], "I" + std::to_string(k + 1)});
    for (size_t k = 0; k < q.f.size(); ++k) ts.push_back({q.f[k], "F" + std::to_string(k + 1)});
    return ts;
  };
  auto m = test::absorb_product({"T1", "T2", "T3", "I1", "F1", "F2"}, terms(na), terms(nb));
  CHECK(got.a == m[""]);
  CHECK(got.t[0] == m["T1"]);
  CHECK(got.t[1] == m["T2"]);
  CHECK(got.t[2] == m["T3"]);
  CHECK(got.i[0] == m["I1"]);
  CHECK(got.f[0] == m["F1"]);
  CHECK(got.f[1] == m["F2"]);

  // and the frozen result of that expansion
  CHECK(got.a == 0);
  CHECK(got.t == std::vector<double>{0, -2, 2});
  CHECK(got.i == std::vector<double>{18});
  CHECK(got.f == std::vector<double>{-7, -5});
  CHECK(got.str() == "-2T2+2T3+18I-7F1-5F2");
}

TEST_CASE("refined multiplication laws and degenerate cases") {
  quad::Alphabet al{2, 2, 2};
  auto order = quad::default_refined_order(al, PrevOrder::parse("T>I>F"));
  auto random_rq = [&] {
    RefinedQuad q = RefinedQuad::zero(al);
    q.a = small_int();
    for (auto* v : {&q.t, &q.i, &q.f})
      for (auto& c : *v) c = small_int();
    return q;
  };
  for (int k = 0; k < 300; ++k) {
    RefinedQuad x = random_rq(), y = random_rq(), z = random_rq();
    CHECK(quad::rnq_mul(order, x, y) == quad::rnq_mul(order, y, x));
    CHECK(quad::rnq_mul(order, quad::rnq_mul(order, x, y), z) ==
          quad::rnq_mul(order, x, quad::rnq_mul(order, y, z)));
    CHECK(quad::rnq_mul(order, x, quad::rnq_add(y, z)) ==
          quad::rnq_add(quad::rnq_mul(order, x, y), quad::rnq_mul(order, x, z)));
  }
  // scalar times scalar, and the scalar unit
  RefinedQuad s = RefinedQuad::zero(al);
  s.a = 3;
  RefinedQuad u = RefinedQuad::zero(al);
  u.a = 1;
  RefinedQuad x = random_rq();
  CHECK(quad::rnq_mul(order, s, s).a == 9);
  CHECK(quad::rnq_mul(order, x, u) == x);
}
