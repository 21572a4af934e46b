#include "nsym/quadruple.hpp"

#include <algorithm>

#include "nsym/format.hpp"

namespace nsym::quad {

std::string QuadNumber::str() const {
  std::string s;
  bool first = true;
  append_term(s, a, "", first);
  append_term(s, b, "T", first);
  append_term(s, c, "I", first);
  append_term(s, d, "F", first);
  return finish_terms(std::move(s));
}

QuadNumber nq_add(const QuadNumber& x, const QuadNumber& y) {
  return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
}

QuadNumber nq_sub(const QuadNumber& x, const QuadNumber& y) {
  return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
}

QuadNumber nq_scale(double alpha, const QuadNumber& x) {
  return {alpha * x.a, alpha * x.b, alpha * x.c, alpha * x.d};
}

lit::Lit absorb(const lit::PrevOrder& order, lit::Lit x, lit::Lit y) {
  return order.prevail(x, y);
}

lit::Lit absorb(const lit::PrevOrder& order, const std::vector<lit::Lit>& xs) {
  if (xs.empty()) fail(Errc::domain, "absorbance of an empty literal list");
  lit::Lit acc = xs.front();
  for (size_t k = 1; k < xs.size(); ++k) acc = order.prevail(acc, xs[k]);
  return acc;
}

QuadNumber nq_mul(const lit::PrevOrder& order, const QuadNumber& x, const QuadNumber& y) {
  using lit::Lit;
  const Lit units[3] = {Lit::T(), Lit::I(), Lit::F()};
  for (Lit u : units)
    if (!order.contains(u)) fail(Errc::domain, "order must cover {T,I,F}");
  const double xs[4] = {x.a, x.b, x.c, x.d};
  const double ys[4] = {y.a, y.b, y.c, y.d};
  QuadNumber r;
  double* slots[3] = {&r.b, &r.c, &r.d};
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) {
      double coef = xs[j] * ys[k];
      if (j == 0 && k == 0) {
        r.a += coef;
      } else if (j == 0) {
        *slots[k - 1] += coef;
      } else if (k == 0) {
        *slots[j - 1] += coef;
      } else {
        Lit win = order.prevail(units[j - 1], units[k - 1]);
        *slots[static_cast<int>(win.kind)] += coef;
      }
    }
  return r;
}

QuadNumber nq_mul_closed_tif(const QuadNumber& x, const QuadNumber& y) {
  return {
      x.a * y.a,
      x.a * y.b + y.a * x.b + x.b * y.b + x.b * y.c + y.b * x.c + x.b * y.d + y.b * x.d,
      x.a * y.c + y.a * x.c + x.c * y.c + x.c * y.d + y.c * x.d,
      x.a * y.d + y.a * x.d + x.d * y.d,
  };
}

QuadNumber nq_mul_closed_fit(const QuadNumber& x, const QuadNumber& y) {
  return {
      x.a * y.a,
      x.a * y.b + y.a * x.b + x.b * y.b,
      x.a * y.c + y.a * x.c + x.b * y.c + y.b * x.c + x.c * y.c,
      x.a * y.d + y.a * x.d + x.b * y.d + y.b * x.d + x.c * y.d + y.c * x.d + x.d * y.d,
  };
}

std::vector<lit::Lit> Alphabet::literals() const {
  if (p < 1 || r < 1 || s < 1) fail(Errc::domain, "alphabet class sizes must be >= 1");
  std::vector<lit::Lit> out;
  for (int k = 1; k <= p; ++k) out.push_back({lit::Kind::T, k});
  for (int k = 1; k <= r; ++k) out.push_back({lit::Kind::I, k});
  for (int k = 1; k <= s; ++k) out.push_back({lit::Kind::F, k});
  return out;
}

std::string Alphabet::str() const {
  return std::to_string(p) + "-" + std::to_string(r) + "-" + std::to_string(s);
}

RefinedQuad RefinedQuad::zero(const Alphabet& al) {
  RefinedQuad q;
  q.t.assign(al.p, 0.0);
  q.i.assign(al.r, 0.0);
  q.f.assign(al.s, 0.0);
  return q;
}

std::string RefinedQuad::str() const {
  std::string s;
  bool first = true;
  append_term(s, a, "", first);
  auto emit = [&](const std::vector<double>& cs, char kind) {
    for (size_t k = 0; k < cs.size(); ++k) {
      std::string unit(1, kind);
      if (cs.size() > 1) unit += std::to_string(k + 1);
      append_term(s, cs[k], unit, first);
    }
  };
  emit(t, 'T');
  emit(i, 'I');
  emit(f, 'F');
  return finish_terms(std::move(s));
}

namespace {

void check_same_alphabet(const RefinedQuad& x, const RefinedQuad& y) {
  if (!(x.alphabet() == y.alphabet()))
    fail(Errc::mismatch, "refined quadruples over different alphabets (" +
                             x.alphabet().str() + " vs " + y.alphabet().str() + ")");
}

}  // namespace

RefinedQuad rnq_add(const RefinedQuad& x, const RefinedQuad& y) {
  check_same_alphabet(x, y);
  RefinedQuad r = x;
  r.a += y.a;
  for (size_t k = 0; k < r.t.size(); ++k) r.t[k] += y.t[k];
  for (size_t k = 0; k < r.i.size(); ++k) r.i[k] += y.i[k];
  for (size_t k = 0; k < r.f.size(); ++k) r.f[k] += y.f[k];
  return r;
}

RefinedQuad rnq_sub(const RefinedQuad& x, const RefinedQuad& y) {
  return rnq_add(x, rnq_scale(-1.0, y));
}

RefinedQuad rnq_scale(double alpha, const RefinedQuad& x) {
  RefinedQuad r = x;
  r.a *= alpha;
  for (auto& c : r.t) c *= alpha;
  for (auto& c : r.i) c *= alpha;
  for (auto& c : r.f) c *= alpha;
  return r;
}

lit::Lit normalize(lit::Lit l, const Alphabet& al) {
  int size = l.kind == lit::Kind::T ? al.p : l.kind == lit::Kind::I ? al.r : al.s;
  if (l.index == 0) {
    if (size != 1)
      fail(Errc::mismatch, "bare " + l.str() + " is ambiguous: the alphabet refines it into " +
                               std::to_string(size) + " literals");
    return {l.kind, 1};
  }
  if (l.index > size)
    fail(Errc::mismatch, l.str() + " outside alphabet " + al.str());
  return l;
}

lit::PrevOrder normalize_order(const lit::PrevOrder& order, const Alphabet& al) {
  std::vector<lit::Lit> chain;
  for (lit::Lit l : order.chain()) chain.push_back(normalize(l, al));
  return lit::PrevOrder(std::move(chain));
}

void check_refined_order(const lit::PrevOrder& order, const Alphabet& al) {
  auto lits = al.literals();
  for (lit::Lit l : lits)
    if (!order.contains(l))
      fail(Errc::suborder, "order " + order.str() + " misses " + l.str());
  if (order.chain().size() != lits.size())
    fail(Errc::suborder, "order " + order.str() + " has literals outside alphabet " + al.str());
  // classes must not interleave: the induced class comparison has to be strict
  auto class_ranks = [&](lit::Kind k) {
    std::vector<int> rs;
    for (lit::Lit l : lits)
      if (l.kind == k) rs.push_back(order.rank(l));
    return rs;
  };
  const lit::Kind kinds[3] = {lit::Kind::T, lit::Kind::I, lit::Kind::F};
  for (lit::Kind a : kinds)
    for (lit::Kind b : kinds) {
      if (a == b) continue;
      auto ra = class_ranks(a), rb = class_ranks(b);
      int amax = *std::max_element(ra.begin(), ra.end());
      int amin = *std::min_element(ra.begin(), ra.end());
      int bmax = *std::max_element(rb.begin(), rb.end());
      int bmin = *std::min_element(rb.begin(), rb.end());
      bool a_above = amax < bmin, b_above = bmax < amin;
      if (!a_above && !b_above)
        fail(Errc::suborder, "suborder violation: classes " +
                                 std::string(1, lit::kind_char(a)) + " and " +
                                 std::string(1, lit::kind_char(b)) + " interleave in " +
                                 order.str());
    }
}

lit::PrevOrder default_refined_order(const Alphabet& al, const lit::PrevOrder& coarse) {
  std::vector<lit::Lit> chain;
  for (lit::Lit c : coarse.chain()) {
    if (c.refined()) fail(Errc::domain, "coarse order must use plain T, I, F");
    int n = c.kind == lit::Kind::T ? al.p : c.kind == lit::Kind::I ? al.r : al.s;
    for (int k = 1; k <= n; ++k) chain.push_back({c.kind, k});
  }
  return lit::PrevOrder(std::move(chain));
}

RefinedQuad rnq_mul(const lit::PrevOrder& raw_order, const RefinedQuad& x,
                    const RefinedQuad& y) {
  check_same_alphabet(x, y);
  lit::PrevOrder order = normalize_order(raw_order, x.alphabet());
  check_refined_order(order, x.alphabet());
  struct Term {
    double coef;
    lit::Lit l;  // index 0 on a sentinel kind is never used; scalar handled apart
  };
  auto terms = [](const RefinedQuad& q) {
    std::vector<Term> ts;
    for (size_t k = 0; k < q.t.size(); ++k) ts.push_back({q.t[k], {lit::Kind::T, int(k) + 1}});
    for (size_t k = 0; k < q.i.size(); ++k) ts.push_back({q.i[k], {lit::Kind::I, int(k) + 1}});
    for (size_t k = 0; k < q.f.size(); ++k) ts.push_back({q.f[k], {lit::Kind::F, int(k) + 1}});
    return ts;
  };
  RefinedQuad r = RefinedQuad::zero(x.alphabet());
  auto slot = [&r](lit::Lit l) -> double& {
    switch (l.kind) {
      case lit::Kind::T: return r.t[l.index - 1];
      case lit::Kind::I: return r.i[l.index - 1];
      default: return r.f[l.index - 1];
    }
  };
  auto xt = terms(x), yt = terms(y);
  r.a = x.a * y.a;
  for (const auto& t : yt) slot(t.l) += x.a * t.coef;
  for (const auto& t : xt) slot(t.l) += y.a * t.coef;
  for (const auto& tx : xt)
    for (const auto& ty : yt) slot(order.prevail(tx.l, ty.l)) += tx.coef * ty.coef;
  return r;
}

}  // namespace nsym::quad
