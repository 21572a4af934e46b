#include "nsym/literal.hpp"

#include <algorithm>
#include <cctype>

namespace nsym::lit {

char kind_char(Kind k) {
  switch (k) {
    case Kind::T: return 'T';
    case Kind::I: return 'I';
    case Kind::F: return 'F';
  }
  return '?';
}

std::string Lit::str() const {
  std::string s(1, kind_char(kind));
  if (index > 0) s += std::to_string(index);
  return s;
}

std::optional<Lit> parse_lit(const std::string& token) {
  if (token.empty()) return std::nullopt;
  Kind k;
  switch (token[0]) {
    case 'T': k = Kind::T; break;
    case 'I': k = Kind::I; break;
    case 'F': k = Kind::F; break;
    default: return std::nullopt;
  }
  if (token.size() == 1) return Lit{k, 0};
  int idx = 0;
  for (size_t p = 1; p < token.size(); ++p) {
    if (!std::isdigit(static_cast<unsigned char>(token[p]))) return std::nullopt;
    idx = idx * 10 + (token[p] - '0');
  }
  if (idx < 1) return std::nullopt;
  return Lit{k, idx};
}

Formula Formula::leaf(Lit v) {
  Formula f;
  f.op_ = Op::leaf;
  f.lit_ = v;
  f.kids_.clear();
  return f;
}

Formula Formula::neg(Formula f) {
  if (f.op_ == Op::neg) return f.kids_.front();  // double negation
  Formula r;
  r.op_ = Op::neg;
  r.kids_ = {std::move(f)};
  return r;
}

Formula Formula::conj(std::vector<Formula> fs) {
  std::vector<Formula> flat;
  for (auto& f : fs) {
    if (f.op_ == Op::conj)
      for (const auto& k : f.kids_) flat.push_back(k);
    else
      flat.push_back(std::move(f));
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.empty()) fail(Errc::domain, "empty conjunction");
  if (flat.size() == 1) return flat.front();
  Formula r;
  r.op_ = Op::conj;
  r.kids_ = std::move(flat);
  return r;
}

Formula Formula::disj(std::vector<Formula> fs) {
  std::vector<Formula> flat;
  for (auto& f : fs) {
    if (f.op_ == Op::disj)
      for (const auto& k : f.kids_) flat.push_back(k);
    else
      flat.push_back(std::move(f));
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.empty()) fail(Errc::domain, "empty disjunction");
  if (flat.size() == 1) return flat.front();
  Formula r;
  r.op_ = Op::disj;
  r.kids_ = std::move(flat);
  return r;
}

Lit Formula::as_leaf() const {
  if (!is_leaf()) fail(Errc::domain, "formula " + str() + " is not a plain literal");
  return lit_;
}

bool Formula::operator==(const Formula& o) const { return (*this <=> o) == 0; }

std::strong_ordering Formula::operator<=>(const Formula& o) const {
  if (auto c = op_ <=> o.op_; c != 0) return c;
  if (op_ == Op::leaf) return lit_ <=> o.lit_;
  if (auto c = kids_.size() <=> o.kids_.size(); c != 0) return c;
  for (size_t k = 0; k < kids_.size(); ++k)
    if (auto c = kids_[k] <=> o.kids_[k]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string Formula::str() const {
  switch (op_) {
    case Op::leaf: return lit_.str();
    case Op::neg: {
      const Formula& k = kids_.front();
      if (k.is_leaf()) return "!" + k.str();
      return "!(" + k.str() + ")";
    }
    case Op::conj:
    case Op::disj: {
      const char* sep = op_ == Op::conj ? "&" : "|";
      std::string s;
      for (size_t k = 0; k < kids_.size(); ++k) {
        if (k) s += sep;
        const Formula& kid = kids_[k];
        // & binds tighter than |, so only a disjunction inside a conjunction
        // needs parentheses
        bool paren = op_ == Op::conj && kid.op() == Op::disj;
        if (paren) s += "(";
        s += kid.str();
        if (paren) s += ")";
      }
      return s;
    }
  }
  return "?";
}

PrevOrder::PrevOrder(std::vector<Lit> strongest_first) : chain_(std::move(strongest_first)) {
  if (chain_.size() < 2) fail(Errc::domain, "prevalence order needs at least two literals");
  auto sorted = chain_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(Errc::domain, "prevalence order repeats a literal");
}

PrevOrder PrevOrder::parse(const std::string& chain) {
  std::vector<Lit> lits;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    auto l = parse_lit(tok);
    if (!l) fail(Errc::unknown_symbol, "'" + tok + "' is not a literal");
    lits.push_back(*l);
    tok.clear();
  };
  for (char c : chain) {
    if (c == '>' || c == ' ' || c == '\t')
      flush();
    else
      tok += c;
  }
  flush();
  return PrevOrder(std::move(lits));
}

std::string PrevOrder::str() const {
  std::string s;
  for (size_t k = 0; k < chain_.size(); ++k) {
    if (k) s += ">";
    s += chain_[k].str();
  }
  return s;
}

bool PrevOrder::contains(Lit x) const {
  return std::find(chain_.begin(), chain_.end(), x) != chain_.end();
}

int PrevOrder::rank(Lit x) const {
  auto it = std::find(chain_.begin(), chain_.end(), x);
  if (it == chain_.end())
    fail(Errc::unknown_symbol, "literal " + x.str() + " not in order " + str());
  return static_cast<int>(it - chain_.begin());
}

Lit PrevOrder::prevail(Lit x, Lit y) const {
  if (x == y) {
    rank(x);  // still reject foreign literals
    return x;
  }
  return rank(x) < rank(y) ? x : y;
}

std::string op_name(OpKind k) {
  switch (k) {
    case OpKind::neg: return "neg";
    case OpKind::conj: return "and";
    case OpKind::disj: return "or";
    case OpKind::xor_: return "xor";
    case OpKind::sheffer: return "sheffer";
    case OpKind::implies: return "implies";
    case OpKind::equiv: return "equiv";
  }
  return "?";
}

std::optional<OpKind> parse_op(const std::string& name) {
  if (name == "neg" || name == "not") return OpKind::neg;
  if (name == "and") return OpKind::conj;
  if (name == "or") return OpKind::disj;
  if (name == "xor") return OpKind::xor_;
  if (name == "sheffer" || name == "nand") return OpKind::sheffer;
  if (name == "implies") return OpKind::implies;
  if (name == "equiv") return OpKind::equiv;
  return std::nullopt;
}

Lit classical_neg(Lit x) {
  if (x == Lit::T()) return Lit::F();
  if (x == Lit::F()) return Lit::T();
  fail(Errc::domain, "classical negation is defined on {T,F} only");
}

Lit classical(OpKind k, Lit x, Lit y) {
  bool p = x == Lit::T(), q = y == Lit::T();
  if ((x != Lit::T() && x != Lit::F()) || (y != Lit::T() && y != Lit::F()))
    fail(Errc::domain, "classical tables are defined on {T,F} only");
  bool r = false;
  switch (k) {
    case OpKind::conj: r = p && q; break;
    case OpKind::disj: r = p || q; break;
    case OpKind::xor_: r = p != q; break;
    case OpKind::sheffer: r = !(p && q); break;
    case OpKind::implies: r = !p || q; break;
    case OpKind::equiv: r = p == q; break;
    case OpKind::neg: fail(Errc::domain, "neg is unary");
  }
  return r ? Lit::T() : Lit::F();
}

namespace {

constexpr Lit kDomain3[3] = {{Kind::T, 0}, {Kind::I, 0}, {Kind::F, 0}};

int idx3(Lit x) {
  if (x.index != 0) fail(Errc::domain, "table operand " + x.str() + " outside {T,I,F}");
  return static_cast<int>(x.kind);
}

}  // namespace

Table::Table(OpKind k, std::vector<Lit> cells) : op_(k), cells_(std::move(cells)) {
  size_t want = unary() ? 3 : 9;
  if (cells_.size() != want) fail(Errc::bad_table, "table has wrong cell count");
}

Lit Table::apply(Lit x, Lit y) const {
  if (unary()) fail(Errc::domain, "negation table is unary");
  return cells_[idx3(x) * 3 + idx3(y)];
}

Lit Table::apply(Lit x) const {
  if (!unary()) fail(Errc::domain, op_name(op_) + " table is binary");
  return cells_[idx3(x)];
}

Table Table::generate(OpKind k, const PrevOrder& order, const std::vector<Override>& ov) {
  for (Lit l : kDomain3)
    if (!order.contains(l))
      fail(Errc::domain, "order " + order.str() + " does not cover {T,I,F}");
  std::vector<Lit> cells;
  if (k == OpKind::neg) {
    for (Lit x : kDomain3) cells.push_back(x == Lit::I() ? Lit::I() : classical_neg(x));
  } else {
    for (Lit x : kDomain3)
      for (Lit y : kDomain3)
        cells.push_back(x != Lit::I() && y != Lit::I() ? classical(k, x, y)
                                                       : order.prevail(x, y));
  }
  Table t(k, std::move(cells));
  for (const auto& o : ov) {
    if (k == OpKind::neg)
      t.cells_[idx3(o.x)] = o.result;
    else
      t.cells_[idx3(o.x) * 3 + idx3(o.y)] = o.result;
  }
  return t;
}

Table Table::negation() { return generate(OpKind::neg, PrevOrder::parse("I>F>T")); }

Table Table::implies_preset() {
  return generate(OpKind::implies, PrevOrder::parse("I>F>T"),
                  {{Lit::I(), Lit::T(), Lit::T()},
                   {Lit::I(), Lit::I(), Lit::T()},
                   {Lit::I(), Lit::F(), Lit::F()},
                   {Lit::F(), Lit::I(), Lit::T()}});
}

Table Table::equiv_preset() {
  return generate(OpKind::equiv, PrevOrder::parse("I>F>T"), {{Lit::I(), Lit::I(), Lit::T()}});
}

Formula act(Action a, Lit p) {
  if (p.refined()) fail(Errc::domain, "actions are defined on plain T, I, F");
  auto T = Formula::leaf(Lit::T());
  auto I = Formula::leaf(Lit::I());
  auto F = Formula::leaf(Lit::F());
  switch (a) {
    case Action::neut: return I;
    case Action::anti:
      switch (p.kind) {
        case Kind::T: return F;
        case Kind::I: return Formula::disj({T, F});
        case Kind::F: return T;
      }
      break;
    case Action::non:
      switch (p.kind) {
        case Kind::T: return Formula::disj({I, F});
        case Kind::I: return Formula::disj({T, F});
        case Kind::F: return Formula::disj({T, I});
      }
      break;
  }
  fail(Errc::domain, "bad action");
}

namespace {

int domain_index(const std::vector<Lit>& domain, Lit x) {
  auto it = std::find(domain.begin(), domain.end(), x);
  if (it == domain.end())
    fail(Errc::domain, "literal " + x.str() + " outside the refined space");
  return static_cast<int>(it - domain.begin());
}

Formula L(const char* s) { return Formula::leaf(*parse_lit(s)); }

const std::vector<Lit> kSpace222 = {
    {Kind::T, 1}, {Kind::T, 2}, {Kind::I, 1}, {Kind::I, 2}, {Kind::F, 1}, {Kind::F, 2}};

}  // namespace

Formula RefinedUnaryTable::apply(Lit x) const { return cells[domain_index(domain, x)]; }

Formula RefinedBinaryTable::apply(Lit x, Lit y) const {
  return cells[domain_index(domain, x) * domain.size() + domain_index(domain, y)];
}

const RefinedUnaryTable& refined_neg_table() {
  static const RefinedUnaryTable t = [] {
    RefinedUnaryTable t;
    t.domain = kSpace222;
    t.cells = {L("F1"), L("F2"), Formula::disj({L("T1"), L("F1")}),
               Formula::disj({L("T2"), L("F2")}), L("T1"), L("T2")};
    return t;
  }();
  return t;
}

const RefinedBinaryTable& refined_and_table() {
  static const RefinedBinaryTable t = [] {
    RefinedBinaryTable t;
    t.op = OpKind::conj;
    t.domain = kSpace222;
    auto T12 = Formula::conj({L("T1"), L("T2")});
    // rows and columns in domain order T1 T2 I1 I2 F1 F2
    t.cells = {
        L("T1"), T12,     L("I1"), L("I2"), L("F1"), L("F2"),  // T1
        T12,     L("T2"), L("I1"), L("I2"), L("F1"), L("F2"),  // T2
        L("I1"), L("I1"), L("I1"), L("I"),  L("F1"), L("F2"),  // I1
        L("I2"), L("I2"), L("I"),  L("I2"), L("F1"), L("F2"),  // I2
        L("F1"), L("F1"), L("F1"), L("F1"), L("F1"), L("F"),   // F1
        L("F2"), L("F2"), L("F2"), L("F2"), L("F"),  L("F2"),  // F2
    };
    return t;
  }();
  return t;
}

const RefinedBinaryTable& refined_or_table() {
  static const RefinedBinaryTable t = [] {
    RefinedBinaryTable t;
    t.op = OpKind::disj;
    t.domain = kSpace222;
    auto F12 = Formula::disj({L("F1"), L("F2")});
    t.cells = {
        L("T1"), L("T"),  L("T1"), L("T1"), L("T1"), L("T1"),  // T1
        L("T"),  L("T2"), L("T2"), L("T2"), L("T2"), L("T2"),  // T2
        L("T1"), L("T2"), L("I1"), L("I"),  L("F1"), L("F2"),  // I1
        L("T1"), L("T2"), L("I"),  L("I2"), L("F1"), L("F2"),  // I2
        L("T1"), L("T2"), L("F1"), L("F1"), L("F1"), F12,      // F1
        L("T1"), L("T2"), L("F2"), L("F2"), F12,     L("F2"),  // F2
    };
    return t;
  }();
  return t;
}

Formula refined_negate(Lit x) { return refined_neg_table().apply(x); }

Formula refined_apply(OpKind op, Lit x, Lit y) {
  if (op == OpKind::conj) return refined_and_table().apply(x, y);
  if (op == OpKind::disj) return refined_or_table().apply(x, y);
  fail(Errc::unsupported, "no refined table for " + op_name(op));
}

BinaryOp table_op(const Table& t) {
  return [t](const Formula& a, const Formula& b) -> std::optional<Formula> {
    if (!a.is_leaf() || !b.is_leaf()) return std::nullopt;
    Lit x = a.as_leaf(), y = b.as_leaf();
    if (x.refined() || y.refined()) return std::nullopt;
    return Formula::leaf(t.apply(x, y));
  };
}

UnaryOp table_neg_op(const Table& t) {
  return [t](const Formula& a) -> std::optional<Formula> {
    if (!a.is_leaf() || a.as_leaf().refined()) return std::nullopt;
    return Formula::leaf(t.apply(a.as_leaf()));
  };
}

BinaryOp refined_op(const RefinedBinaryTable& t) {
  return [&t](const Formula& a, const Formula& b) -> std::optional<Formula> {
    if (!a.is_leaf() || !b.is_leaf()) return std::nullopt;
    Lit x = a.as_leaf(), y = b.as_leaf();
    auto in = [&](Lit l) {
      return std::find(t.domain.begin(), t.domain.end(), l) != t.domain.end();
    };
    if (!in(x) || !in(y)) return std::nullopt;
    return t.apply(x, y);
  };
}

UnaryOp refined_neg_op(const RefinedUnaryTable& t) {
  return [&t](const Formula& a) -> std::optional<Formula> {
    if (!a.is_leaf()) return std::nullopt;
    Lit x = a.as_leaf();
    if (std::find(t.domain.begin(), t.domain.end(), x) == t.domain.end())
      return std::nullopt;
    return t.apply(x);
  };
}

std::set<Formula> closure(std::set<Formula> space, const std::vector<UnaryOp>& unary,
                          const std::vector<BinaryOp>& binary, int max_rounds) {
  for (int round = 0; round < max_rounds; ++round) {
    std::set<Formula> fresh;
    for (const auto& f : space)
      for (const auto& op : unary)
        if (auto r = op(f); r && !space.count(*r)) fresh.insert(*r);
    for (const auto& a : space)
      for (const auto& b : space)
        for (const auto& op : binary)
          if (auto r = op(a, b); r && !space.count(*r)) fresh.insert(*r);
    if (fresh.empty()) break;
    space.merge(fresh);
  }
  return space;
}

}  // namespace nsym::lit
