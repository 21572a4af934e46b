#pragma once

#include <string>

#include "nsym/error.hpp"
#include "nsym/interval.hpp"

namespace nsym::tif {

/// Numerical truth / indeterminacy / falsehood degrees, each in [0,1].
/// The sum is unconstrained (up to 3): paraconsistent values are allowed.
struct Triple {
  double t, i, f;

  Triple(double t, double i, double f);
  bool operator==(const Triple&) const = default;
  std::string str() const;
};

/// Interval-valued components. First-class for storage and printing only:
/// every operator rejects interval operands.
struct IntervalTriple {
  Interval t, i, f;

  IntervalTriple(Interval t, Interval i, Interval f);
  bool operator==(const IntervalTriple&) const = default;
  std::string str() const;
};

enum class NegVariant {
  swap_tf,         // <f, i, t>
  swap_tf_flip_i,  // <f, 1-i, t>
  complement_all,  // <1-t, 1-i, 1-f>
  complement_tf,   // <1-t, i, 1-f>
};

enum class Norm { min, product, lukasiewicz };
enum class Conorm { max, prob_sum, bounded_sum };

double fuzzy_and(Norm k, double a, double b);
double fuzzy_or(Conorm k, double a, double b);

enum class Impl {
  fodor,
  weber,
  yager,
  goguen,
  rescher,
  kleene_dienes,
  reichenbach,
  goedel,
  lukasiewicz,
};

double fuzzy_implies(Impl k, double x, double y);

/// One of the six conjunction shapes, with pluggable t-norm/t-conorm.
/// The truth slot is always norm(t,t); the shape selects the i and f slots:
///   1: <i or i, f or f>    2: <i and i, f or f>   3: <i and i, f and f>
///   4: <avg i, f or f>     5: <1-avg i, f or f>   6: <|i-i|, f or f>
struct ConjVariant {
  int form = 1;
  Norm norm = Norm::min;
  Conorm conorm = Conorm::max;

  bool operator==(const ConjVariant&) const = default;
  /// The simplest operator: <min, max, max>.
  static ConjVariant min_max_max() { return {}; }
};

/// Dual shapes for disjunction; the truth slot is always conorm(t,t):
///   1: <i and i, f and f>  2: <i or i, f and f>   3: <i or i, f or f>
///   4: <avg i, f and f>    5: <1-avg i, f and f>  6: <|i-i|, f or f>
struct DisjVariant {
  int form = 1;
  Conorm conorm = Conorm::max;
  Norm norm = Norm::min;

  bool operator==(const DisjVariant&) const = default;
  /// <max, min, min>
  static DisjVariant max_min_min() { return {}; }
};

Triple negate(NegVariant v, const Triple& a);
Triple conjoin(const ConjVariant& v, const Triple& a, const Triple& b);
Triple disjoin(const DisjVariant& v, const Triple& a, const Triple& b);

/// A (truth, falsehood) pair for the intuitionistic-style implication.
struct TfPair {
  double t, f;
  TfPair(double t, double f);
  bool operator==(const TfPair&) const = default;
  std::string str() const;
};

/// min( max(1-tA,tB), max(1-fB,fA) ) in the truth slot, min(fB, 1-tA) in the
/// falsehood slot.
TfPair if_implies(const TfPair& a, const TfPair& b);

/// Implication classes on triples. in1..in4 route the truth slot through a
/// fuzzy implication and combine i/f per class; neg_or is (not A) or B.
struct ImplClass {
  enum class Kind { in1, in2, in3, in4, neg_or };
  Kind kind = Kind::neg_or;
  Impl impl = Impl::fodor;      // truth slot of in1..in4
  Norm norm = Norm::min;        // fuzzy-and slots
  Conorm conorm = Conorm::max;  // fuzzy-or slot of in2
  NegVariant neg = NegVariant::swap_tf;
  DisjVariant disj = DisjVariant::max_min_min();

  bool operator==(const ImplClass&) const = default;
};

Triple implies(const ImplClass& c, const Triple& a, const Triple& b);

/// Multiplicative conjunction: expand (tA+iA+fA)(tB+iB+fB) and bucket each of
/// the nine products by the pessimistic order truth < indeterminacy < falsity.
/// Buckets saturate at 1 so the result stays a valid triple for
/// super-normalized inputs; inputs summing to <= 1 never saturate.
Triple mul_conjoin(const Triple& a, const Triple& b);

/// Scaled L1 distance (|dt|+|di|+|df|)/3 in [0,1].
double contradiction_degree(const Triple& a, const Triple& b);

/// A carrier value tagged with a triple, for the max/min semigroup.
struct Weighted {
  double carrier;
  Triple value;
  bool operator==(const Weighted&) const = default;
  std::string str() const;
};

/// x1 * x2 = max carrier, <min t, max i, max f>. Commutative, associative,
/// idempotent.
Weighted star(const Weighted& a, const Weighted& b);

}  // namespace nsym::tif
