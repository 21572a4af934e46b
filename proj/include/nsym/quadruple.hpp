#pragma once

#include <string>
#include <vector>

#include "nsym/error.hpp"
#include "nsym/literal.hpp"

namespace nsym::quad {

/// a + bT + cI + dF: known part a, unknown part bT + cI + dF.
struct QuadNumber {
  double a = 0, b = 0, c = 0, d = 0;
  bool operator==(const QuadNumber&) const = default;
  std::string str() const;
};

QuadNumber nq_add(const QuadNumber& x, const QuadNumber& y);
QuadNumber nq_sub(const QuadNumber& x, const QuadNumber& y);
QuadNumber nq_scale(double alpha, const QuadNumber& x);

/// Absorbance: the prevailing literal absorbs the other; x*x = x.
lit::Lit absorb(const lit::PrevOrder& order, lit::Lit x, lit::Lit y);
lit::Lit absorb(const lit::PrevOrder& order, const std::vector<lit::Lit>& xs);

/// Full 16-term distributive expansion, each literal product resolved by
/// absorbance under the given order over {T,I,F}.
QuadNumber nq_mul(const lit::PrevOrder& order, const QuadNumber& x, const QuadNumber& y);

/// Closed-form coefficients under T>I>F. Includes the c1c2 term in the I
/// slot that the idempotent square I*I = I forces.
QuadNumber nq_mul_closed_tif(const QuadNumber& x, const QuadNumber& y);
/// Closed-form coefficients under F>I>T.
QuadNumber nq_mul_closed_fit(const QuadNumber& x, const QuadNumber& y);

/// Sizes of the refined alphabet: p truths, r indeterminacies, s falsehoods.
struct Alphabet {
  int p = 2, r = 2, s = 2;
  bool operator==(const Alphabet&) const = default;
  std::vector<lit::Lit> literals() const;
  std::string str() const;
};

/// a + sum bi Ti + sum cj Ij + sum dk Fk. Classes with one member print
/// unindexed (T, I, F).
struct RefinedQuad {
  double a = 0;
  std::vector<double> t, i, f;

  Alphabet alphabet() const {
    return {static_cast<int>(t.size()), static_cast<int>(i.size()),
            static_cast<int>(f.size())};
  }
  bool operator==(const RefinedQuad&) const = default;
  std::string str() const;

  static RefinedQuad zero(const Alphabet& al);
};

RefinedQuad rnq_add(const RefinedQuad& x, const RefinedQuad& y);
RefinedQuad rnq_sub(const RefinedQuad& x, const RefinedQuad& y);
RefinedQuad rnq_scale(double alpha, const RefinedQuad& x);

/// Maps the unindexed literal of a one-member class to its single member
/// (I -> I1 when r == 1) and validates indices against the alphabet.
lit::Lit normalize(lit::Lit l, const Alphabet& al);
lit::PrevOrder normalize_order(const lit::PrevOrder& order, const Alphabet& al);

/// Rejects orders that are not total over the alphabet or that interleave
/// classes (every literal of a stronger class must outrank every literal of
/// a weaker one).
void check_refined_order(const lit::PrevOrder& order, const Alphabet& al);

/// Index order within each class (T1>T2>...), classes arranged by the given
/// coarse chain such as "T>I>F".
lit::PrevOrder default_refined_order(const Alphabet& al, const lit::PrevOrder& coarse);

/// Full distributive expansion with absorbance on refined literals.
RefinedQuad rnq_mul(const lit::PrevOrder& order, const RefinedQuad& x, const RefinedQuad& y);

}  // namespace nsym::quad
