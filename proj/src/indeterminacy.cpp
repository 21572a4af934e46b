#include "nsym/indeterminacy.hpp"

#include <algorithm>
#include <cmath>

namespace nsym::ind {

std::string to_string(const NeutroNumber& n) {
  std::string s;
  bool first = true;
  append_term(s, n.a, "", first);
  append_term(s, n.b, "I", first);
  return finish_terms(std::move(s));
}

NeutroNumber law_sharp(const NeutroNumber& x, const NeutroNumber& y) {
  auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!in_unit(x.a) || !in_unit(x.b) || !in_unit(y.a) || !in_unit(y.b))
    fail(Errc::domain, "law operands must have coefficients in [0,1]");
  if (y.a == 0.0)
    fail(Errc::indeterminate, "indeterminate law: undefined when the divisor's determinate part is 0");
  return {(x.a + x.b) / y.a, y.b};
}

SubIndTable::SubIndTable(int arity, std::vector<int> cells)
    : arity_(arity), cells_(std::move(cells)) {
  if (arity_ < 1) fail(Errc::bad_table, "sub-indeterminacy table arity must be >= 1");
  if (cells_.size() != static_cast<size_t>(arity_) * arity_)
    fail(Errc::bad_table, "sub-indeterminacy table must have arity^2 cells");
  for (int c : cells_)
    if (c < 1 || c > arity_)
      fail(Errc::bad_table, "table cell I" + std::to_string(c) + " outside {I1..I" +
                                std::to_string(arity_) + "}");
}

int SubIndTable::mul(int j, int k) const {
  if (j < 1 || j > arity_ || k < 1 || k > arity_)
    fail(Errc::domain, "sub-indeterminacy index outside {1.." + std::to_string(arity_) + "}");
  return cells_[(j - 1) * arity_ + (k - 1)];
}

bool SubIndTable::commutative() const {
  for (int j = 1; j <= arity_; ++j)
    for (int k = j + 1; k <= arity_; ++k)
      if (mul(j, k) != mul(k, j)) return false;
  return true;
}

bool SubIndTable::associative() const {
  for (int a = 1; a <= arity_; ++a)
    for (int b = 1; b <= arity_; ++b)
      for (int c = 1; c <= arity_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  return true;
}

bool SubIndTable::idempotent() const {
  for (int a = 1; a <= arity_; ++a)
    if (mul(a, a) != a) return false;
  return true;
}

std::shared_ptr<const SubIndTable> SubIndTable::venn6() {
  static const auto table =
      std::make_shared<const SubIndTable>(derive_subind_table(venn6_formulas()));
  return table;
}

std::shared_ptr<const SubIndTable> SubIndTable::trivial1() {
  static const auto table = std::make_shared<const SubIndTable>(1, std::vector<int>{1});
  return table;
}

std::string to_string(const RefinedNumber& n) {
  std::string s;
  bool first = true;
  append_term(s, n.a, "", first);
  for (size_t k = 0; k < n.b.size(); ++k)
    append_term(s, n.b[k], "I" + std::to_string(k + 1), first);
  return finish_terms(std::move(s));
}

std::string VennRegions::str() const {
  static const char* names[4] = {"T&F", "T&!F", "!T&F", "!T&!F"};
  std::string s = "{";
  bool first = true;
  for (int bit = 0; bit < 4; ++bit)
    if (mask & (1 << bit)) {
      if (!first) s += ", ";
      s += names[bit];
      first = false;
    }
  return s + "}";
}

namespace {

VennRegions regions_under(const lit::Formula& f, bool tv, bool fv) {
  // evaluate against one atom assignment and expand over the four atoms below
  using Op = lit::Formula::Op;
  switch (f.op()) {
    case Op::leaf: {
      lit::Lit l = f.as_leaf();
      if (l.refined() || l.kind == lit::Kind::I)
        fail(Errc::domain, "Venn formulas may only use plain T and F");
      bool v = l.kind == lit::Kind::T ? tv : fv;
      return {uint8_t(v ? 0xF : 0)};
    }
    case Op::neg: return regions_under(f.operands().front(), tv, fv).complement();
    case Op::conj: {
      VennRegions r{0xF};
      for (const auto& k : f.operands()) r = r & regions_under(k, tv, fv);
      return r;
    }
    case Op::disj: {
      VennRegions r{0};
      for (const auto& k : f.operands()) r = r | regions_under(k, tv, fv);
      return r;
    }
  }
  fail(Errc::domain, "bad formula");
}

}  // namespace

VennRegions venn_regions(const lit::Formula& f) {
  // atoms in mask order: (T,F), (T,!F), (!T,F), (!T,!F)
  const bool assign[4][2] = {{true, true}, {true, false}, {false, true}, {false, false}};
  VennRegions out;
  for (int bit = 0; bit < 4; ++bit) {
    VennRegions r = regions_under(f, assign[bit][0], assign[bit][1]);
    if (r.mask & (1 << bit)) out.mask |= (1 << bit);
  }
  return out;
}

SubIndTable derive_subind_table(const std::vector<lit::Formula>& defs) {
  const int r = static_cast<int>(defs.size());
  if (r < 1) fail(Errc::bad_table, "need at least one sub-indeterminacy definition");
  std::vector<VennRegions> reg;
  reg.reserve(r);
  for (const auto& f : defs) reg.push_back(venn_regions(f));
  std::vector<int> cells;
  cells.reserve(r * r);
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k) {
      VennRegions want = reg[j] & reg[k];
      auto it = std::find(reg.begin(), reg.end(), want);
      if (it == reg.end())
        fail(Errc::bad_table, "family not intersection-closed: I" + std::to_string(j + 1) +
                                  "*I" + std::to_string(k + 1) + " = " + want.str() +
                                  " matches no member");
      cells.push_back(static_cast<int>(it - reg.begin()) + 1);
    }
  return SubIndTable(r, std::move(cells));
}

std::vector<lit::Formula> venn6_formulas() {
  using F = lit::Formula;
  auto T = F::leaf(lit::Lit::T());
  auto Fl = F::leaf(lit::Lit::F());
  auto nT = F::neg(T);
  auto nF = F::neg(Fl);
  return {
      F::conj({T, Fl}),                                        // contradiction
      F::disj({T, Fl}),                                        // uncertainty
      F::disj({F::conj({T, nF}), F::conj({nT, Fl})}),          // exactly one
      F::conj({nT, nF}),                                       // neither
      F::disj({nT, nF}),                                       // vagueness
      F::conj({T, nT}),                                        // empty
  };
}

std::string Decomposition::str() const {
  return to_string(number) + ", I in " + fmt_interval(indeterminacy, true);
}

Decomposition decompose_real(double x, int determinate_digits, double scale) {
  if (determinate_digits < 0) fail(Errc::domain, "digit count must be >= 0");
  if (!(scale > 0)) fail(Errc::domain, "scale must be > 0");
  const double unit = std::pow(10.0, -determinate_digits);
  const double a = std::floor(x / unit) * unit;
  const double residue = (x - a) / scale;
  const double grid = unit / 10.0;
  double lo = std::floor(residue / grid) * grid;
  double hi = std::ceil(residue / grid) * grid;
  if (lo == hi) {
    // exact-grid input: degenerate bracket from the residue up to the middle
    // of the truncation cell
    hi = lo + unit / (2.0 * scale);
  }
  return {{a, scale}, {lo, hi}};
}

}  // namespace nsym::ind
