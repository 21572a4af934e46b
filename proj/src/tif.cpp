#include "nsym/tif.hpp"

#include <algorithm>
#include <cmath>

#include "nsym/format.hpp"

namespace nsym::tif {

namespace {

void check_unit(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0))
    fail(Errc::domain, std::string(name) + " component " + fmt_real(x) + " outside [0,1]");
}

void check_unit_interval(const Interval& iv, const char* name) {
  if (!(iv.lo >= 0.0 && iv.lo <= iv.hi && iv.hi <= 1.0))
    fail(Errc::domain, std::string(name) + " interval " + fmt_interval(iv, false) +
                           " not an ordered sub-interval of [0,1]");
}

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

}  // namespace

Triple::Triple(double t_, double i_, double f_) : t(t_), i(i_), f(f_) {
  check_unit(t, "t");
  check_unit(i, "i");
  check_unit(f, "f");
}

std::string Triple::str() const {
  return "(" + fmt_real(t) + "," + fmt_real(i) + "," + fmt_real(f) + ")";
}

IntervalTriple::IntervalTriple(Interval t_, Interval i_, Interval f_) : t(t_), i(i_), f(f_) {
  check_unit_interval(t, "t");
  check_unit_interval(i, "i");
  check_unit_interval(f, "f");
}

std::string IntervalTriple::str() const {
  return "(" + fmt_interval(t, false) + "," + fmt_interval(i, false) + "," +
         fmt_interval(f, false) + ")";
}

double fuzzy_and(Norm k, double a, double b) {
  check_unit(a, "norm");
  check_unit(b, "norm");
  switch (k) {
    case Norm::min: return std::min(a, b);
    case Norm::product: return a * b;
    case Norm::lukasiewicz: return std::max(0.0, a + b - 1.0);
  }
  fail(Errc::domain, "bad norm kind");
}

double fuzzy_or(Conorm k, double a, double b) {
  check_unit(a, "conorm");
  check_unit(b, "conorm");
  switch (k) {
    case Conorm::max: return std::max(a, b);
    case Conorm::prob_sum: return a + b - a * b;
    case Conorm::bounded_sum: return std::min(1.0, a + b);
  }
  fail(Errc::domain, "bad conorm kind");
}

double fuzzy_implies(Impl k, double x, double y) {
  check_unit(x, "implication");
  check_unit(y, "implication");
  switch (k) {
    case Impl::fodor: return x <= y ? 1.0 : std::max(1.0 - x, y);
    case Impl::weber: return x < 1.0 ? 1.0 : y;
    case Impl::yager: return (x == 0.0 && y == 0.0) ? 1.0 : std::pow(y, x);
    case Impl::goguen: return x <= y ? 1.0 : y / x;
    case Impl::rescher: return x <= y ? 1.0 : 0.0;
    case Impl::kleene_dienes: return std::max(1.0 - x, y);
    case Impl::reichenbach: return 1.0 - x + x * y;
    case Impl::goedel: return x <= y ? 1.0 : y;
    case Impl::lukasiewicz: return std::min(1.0, 1.0 - x + y);
  }
  fail(Errc::domain, "bad implication kind");
}

Triple negate(NegVariant v, const Triple& a) {
  switch (v) {
    case NegVariant::swap_tf: return {a.f, a.i, a.t};
    case NegVariant::swap_tf_flip_i: return {a.f, 1.0 - a.i, a.t};
    case NegVariant::complement_all: return {1.0 - a.t, 1.0 - a.i, 1.0 - a.f};
    case NegVariant::complement_tf: return {1.0 - a.t, a.i, 1.0 - a.f};
  }
  fail(Errc::domain, "bad negation variant");
}

namespace {

double middle_slot(int form, Norm n, Conorm c, double ia, double ib, bool conj_family) {
  switch (form) {
    case 1: return conj_family ? fuzzy_or(c, ia, ib) : fuzzy_and(n, ia, ib);
    case 2: return conj_family ? fuzzy_and(n, ia, ib) : fuzzy_or(c, ia, ib);
    case 3: return conj_family ? fuzzy_and(n, ia, ib) : fuzzy_or(c, ia, ib);
    case 4: return (ia + ib) / 2.0;
    case 5: return 1.0 - (ia + ib) / 2.0;
    case 6: return std::fabs(ia - ib);
  }
  fail(Errc::domain, "conjunction/disjunction form must be 1..6");
}

}  // namespace

Triple conjoin(const ConjVariant& v, const Triple& a, const Triple& b) {
  double t = fuzzy_and(v.norm, a.t, b.t);
  double i = middle_slot(v.form, v.norm, v.conorm, a.i, b.i, true);
  // forms 1,2,4,5,6 take f or f; only form 3 uses f and f
  double f = v.form == 3 ? fuzzy_and(v.norm, a.f, b.f) : fuzzy_or(v.conorm, a.f, b.f);
  return {t, i, f};
}

Triple disjoin(const DisjVariant& v, const Triple& a, const Triple& b) {
  double t = fuzzy_or(v.conorm, a.t, b.t);
  double i = middle_slot(v.form, v.norm, v.conorm, a.i, b.i, false);
  // forms 1,2,4,5 take f and f; forms 3 and 6 use f or f
  double f = (v.form == 3 || v.form == 6) ? fuzzy_or(v.conorm, a.f, b.f)
                                          : fuzzy_and(v.norm, a.f, b.f);
  return {t, i, f};
}

TfPair::TfPair(double t_, double f_) : t(t_), f(f_) {
  check_unit(t, "t");
  check_unit(f, "f");
}

std::string TfPair::str() const { return "(" + fmt_real(t) + "," + fmt_real(f) + ")"; }

TfPair if_implies(const TfPair& a, const TfPair& b) {
  double t = std::min(std::max(1.0 - a.t, b.t), std::max(1.0 - b.f, a.f));
  double f = std::min(b.f, 1.0 - a.t);
  return {t, f};
}

Triple implies(const ImplClass& c, const Triple& a, const Triple& b) {
  if (c.kind == ImplClass::Kind::neg_or) return disjoin(c.disj, negate(c.neg, a), b);
  double t = fuzzy_implies(c.impl, a.t, b.t);
  double i = 0, f = 0;
  switch (c.kind) {
    case ImplClass::Kind::in1:
      i = fuzzy_and(c.norm, a.i, b.i);
      f = fuzzy_and(c.norm, a.f, b.f);
      break;
    case ImplClass::Kind::in2:
      i = fuzzy_or(c.conorm, a.i, b.i);
      f = fuzzy_and(c.norm, a.f, b.f);
      break;
    case ImplClass::Kind::in3:
      i = (a.i + b.i) / 2.0;
      f = fuzzy_and(c.norm, a.f, b.f);
      break;
    case ImplClass::Kind::in4:
      i = (a.i + b.i) / 2.0;
      f = (a.f + b.f) / 2.0;
      break;
    default: break;
  }
  return {t, i, f};
}

Triple mul_conjoin(const Triple& a, const Triple& b) {
  double t = a.t * b.t;
  double i = a.i * b.i + a.t * b.i + b.t * a.i;
  double f = a.t * b.f + b.t * a.f + a.i * b.f + b.i * a.f + a.f * b.f;
  return {clamp01(t), clamp01(i), clamp01(f)};
}

double contradiction_degree(const Triple& a, const Triple& b) {
  return (std::fabs(a.t - b.t) + std::fabs(a.i - b.i) + std::fabs(a.f - b.f)) / 3.0;
}

std::string Weighted::str() const { return fmt_real(carrier) + value.str(); }

Weighted star(const Weighted& a, const Weighted& b) {
  Triple v{std::min(a.value.t, b.value.t), std::max(a.value.i, b.value.i),
           std::max(a.value.f, b.value.f)};
  return {std::max(a.carrier, b.carrier), v};
}

}  // namespace nsym::tif
