#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nsym/error.hpp"

namespace nsym::lit {

enum class Kind : uint8_t { T = 0, I = 1, F = 2 };

char kind_char(Kind k);

/// A literal symbol: T, I, F or an indexed refinement T1, I2, ...
/// index 0 means the unrefined literal. Ordering is the canonical display
/// order: truths before indeterminacies before falsehoods, then by index.
struct Lit {
  Kind kind;
  int index = 0;

  auto operator<=>(const Lit&) const = default;
  bool refined() const { return index > 0; }
  std::string str() const;

  static Lit T() { return {Kind::T, 0}; }
  static Lit I() { return {Kind::I, 0}; }
  static Lit F() { return {Kind::F, 0}; }
};

/// Parses "T", "I2", "F13". Returns nothing for other spellings.
std::optional<Lit> parse_lit(const std::string& token);

/// A finite and/or/not expression over literals, kept canonical: nested
/// same-connective nodes are flattened, operands sorted and deduplicated,
/// double negations removed. Equality and ordering are structural on the
/// canonical form, so formulas can live in sets and table cells.
class Formula {
 public:
  enum class Op : uint8_t { leaf = 0, neg = 1, conj = 2, disj = 3 };

  Formula() = default;  // the plain literal I
  static Formula leaf(Lit v);
  static Formula neg(Formula f);
  static Formula conj(std::vector<Formula> fs);
  static Formula disj(std::vector<Formula> fs);

  Op op() const { return op_; }
  bool is_leaf() const { return op_ == Op::leaf; }
  Lit as_leaf() const;
  const std::vector<Formula>& operands() const { return kids_; }

  bool operator==(const Formula& o) const;
  std::strong_ordering operator<=>(const Formula& o) const;
  bool operator<(const Formula& o) const { return (*this <=> o) < 0; }

  /// Canonical text: "T", "T1&T2", "T|F", "!(T&F)".
  std::string str() const;

 private:
  Op op_ = Op::leaf;
  Lit lit_{Kind::I, 0};
  std::vector<Formula> kids_;
};

/// A strict total order on a literal alphabet; the first element prevails
/// over everything after it.
class PrevOrder {
 public:
  explicit PrevOrder(std::vector<Lit> strongest_first);

  /// Parses chains like "I>F>T" or "T1>T2>T3>I>F1>F2".
  static PrevOrder parse(const std::string& chain);

  const std::vector<Lit>& chain() const { return chain_; }
  std::string str() const;
  bool contains(Lit x) const;
  int rank(Lit x) const;  // 0 = strongest; throws for foreign literals
  Lit prevail(Lit x, Lit y) const;
  bool operator==(const PrevOrder&) const = default;

 private:
  std::vector<Lit> chain_;
};

enum class OpKind { neg, conj, disj, xor_, sheffer, implies, equiv };

std::string op_name(OpKind k);
std::optional<OpKind> parse_op(const std::string& name);

/// The two-valued table of an operator kind on {T,F}.
Lit classical(OpKind k, Lit x, Lit y);
Lit classical_neg(Lit x);

struct Override {
  Lit x, y;  // y ignored for neg
  Lit result;
};

/// A total truth-value table over {T,I,F} (3 cells for neg, 9 otherwise).
class Table {
 public:
  Table(OpKind k, std::vector<Lit> cells);

  OpKind op() const { return op_; }
  bool unary() const { return op_ == OpKind::neg; }
  Lit apply(Lit x, Lit y) const;
  Lit apply(Lit x) const;

  /// Cells with both operands classical follow the two-valued table; cells
  /// involving I take the prevailing operand; overrides patch single cells.
  static Table generate(OpKind k, const PrevOrder& order,
                        const std::vector<Override>& overrides = {});

  /// not T = F, not I = I, not F = T.
  static Table negation();
  /// The preferred implication table: I -> T and I -> I are true, I -> F is
  /// false; stored verbatim rather than generated.
  static Table implies_preset();
  /// The preferred equivalence table: I <-> I is true, other I cells are I.
  static Table equiv_preset();

  bool operator==(const Table&) const = default;
  const std::vector<Lit>& cells() const { return cells_; }

 private:
  OpKind op_;
  std::vector<Lit> cells_;  // row-major over (T,I,F) x (T,I,F)
};

enum class Action { neut, anti, non };

/// Truth-value tables of the three actions on a plain literal:
///   neut: T,I,F -> I, I, I
///   anti: T,I,F -> F, T|F, T
///   non : T,I,F -> I|F, T|F, T|I
Formula act(Action a, Lit p);

/// Unary refined table mapping each literal of a refined space to a formula.
struct RefinedUnaryTable {
  std::vector<Lit> domain;
  std::vector<Formula> cells;
  Formula apply(Lit x) const;
};

/// Binary refined table over a refined space; commutative presets store the
/// full square anyway so lookups stay trivial.
struct RefinedBinaryTable {
  OpKind op;
  std::vector<Lit> domain;
  std::vector<Formula> cells;  // row-major
  Formula apply(Lit x, Lit y) const;
};

/// Negation over {T1,T2,I1,I2,F1,F2}: refined truths and falsehoods swap
/// within their index, each I_k negates to T_k|F_k.
const RefinedUnaryTable& refined_neg_table();
/// Conjunction over the same space, falsehoods prevailing over
/// indeterminacies prevailing over truths; T1&T2 stays composite, I1&I2 and
/// F1&F2 coarsen to I and F.
const RefinedBinaryTable& refined_and_table();
/// Disjunction, truths prevailing over falsehoods prevailing over
/// indeterminacies; T1|T2 coarsens to T, F1|F2 stays composite.
const RefinedBinaryTable& refined_or_table();

Formula refined_negate(Lit x);
Formula refined_apply(OpKind op, Lit x, Lit y);  // conj or disj

using UnaryOp = std::function<std::optional<Formula>(const Formula&)>;
using BinaryOp = std::function<std::optional<Formula>(const Formula&, const Formula&)>;

/// Adapters that apply a table when the formula(s) are plain leaves in its
/// domain and decline otherwise.
BinaryOp table_op(const Table& t);
UnaryOp table_neg_op(const Table& t);
BinaryOp refined_op(const RefinedBinaryTable& t);
UnaryOp refined_neg_op(const RefinedUnaryTable& t);

/// Least superset of `space` closed under the given operators, or the state
/// after max_rounds growth rounds. Operators that decline an element simply
/// contribute nothing for it.
std::set<Formula> closure(std::set<Formula> space, const std::vector<UnaryOp>& unary,
                          const std::vector<BinaryOp>& binary, int max_rounds = 16);

}  // namespace nsym::lit
