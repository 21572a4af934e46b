#include "nsym/expr/eval.hpp"

#include <cmath>
#include <numbers>

#include "nsym/format.hpp"

namespace nsym::expr {

namespace {

using lit::Formula;
using lit::Lit;

[[noreturn]] void type_error(const std::string& what) { fail(Errc::mismatch, what); }

// ---------------------------------------------------------------------------
// numeric tower: scalar < neutro number < refined number / quadruple < refined
// quadruple; duals, hypercomplex and quaternions only mix with scalars
// ---------------------------------------------------------------------------

enum class Tower { scalar, nn, rn, quad, rquad, dual, hc, quat, none };

Tower tower_of(const Value& v) {
  if (std::holds_alternative<double>(v)) return Tower::scalar;
  if (std::holds_alternative<ind::NeutroNumber>(v)) return Tower::nn;
  if (std::holds_alternative<ind::RefinedNumber>(v)) return Tower::rn;
  if (std::holds_alternative<quad::QuadNumber>(v)) return Tower::quad;
  if (std::holds_alternative<quad::RefinedQuad>(v)) return Tower::rquad;
  if (std::holds_alternative<hyper::Dual>(v)) return Tower::dual;
  if (std::holds_alternative<hyper::NComplex>(v)) return Tower::hc;
  if (std::holds_alternative<hyper::Quaternion>(v)) return Tower::quat;
  return Tower::none;
}

// a literal leaf used in arithmetic becomes the unit of its natural tower
Value literal_unit(Lit l, double coef, const EvalConfig& cfg) {
  if (l.index == 0) {
    switch (l.kind) {
      case lit::Kind::T: return quad::QuadNumber{0, coef, 0, 0};
      case lit::Kind::I: return ind::NeutroNumber{0, coef};
      case lit::Kind::F: return quad::QuadNumber{0, 0, 0, coef};
    }
  }
  if (l.kind == lit::Kind::I) {
    int r = cfg.subind->arity();
    if (l.index > r)
      fail(Errc::mismatch, l.str() + " outside the sub-indeterminacy table (r=" +
                               std::to_string(r) + "); load a wider table");
    ind::RefinedNumber n{0, std::vector<double>(r, 0.0), cfg.subind};
    n.b[l.index - 1] = coef;
    return n;
  }
  // refined T/F go to the quadruple alphabet
  quad::RefinedQuad q = quad::RefinedQuad::zero(cfg.alphabet);
  lit::Lit nl = quad::normalize(l, cfg.alphabet);
  if (nl.kind == lit::Kind::T)
    q.t[nl.index - 1] = coef;
  else
    q.f[nl.index - 1] = coef;
  return q;
}

quad::QuadNumber to_quad(const Value& v) {
  if (auto* s = std::get_if<double>(&v)) return {*s, 0, 0, 0};
  if (auto* n = std::get_if<ind::NeutroNumber>(&v)) return {n->a, 0, n->b, 0};
  return std::get<quad::QuadNumber>(v);
}

ind::NeutroNumber to_nn(const Value& v) {
  if (auto* s = std::get_if<double>(&v)) return {*s, 0};
  return std::get<ind::NeutroNumber>(v);
}

ind::RefinedNumber to_rn(const Value& v, const EvalConfig& cfg) {
  if (auto* s = std::get_if<double>(&v))
    return {*s, std::vector<double>(cfg.subind->arity(), 0.0), cfg.subind};
  if (auto* n = std::get_if<ind::NeutroNumber>(&v)) {
    if (n->b != 0.0)
      fail(Errc::mismatch,
           "cannot mix the unrefined I with refined sub-indeterminacies I1..Ir");
    return {n->a, std::vector<double>(cfg.subind->arity(), 0.0), cfg.subind};
  }
  return std::get<ind::RefinedNumber>(v);
}

quad::RefinedQuad to_rquad(const Value& v, const EvalConfig& cfg) {
  const quad::Alphabet& al = cfg.alphabet;
  if (auto* q = std::get_if<quad::RefinedQuad>(&v)) {
    if (!(q->alphabet() == al))
      fail(Errc::mismatch, "refined quadruple over alphabet " + q->alphabet().str() +
                               " under active alphabet " + al.str());
    return *q;
  }
  quad::RefinedQuad r = quad::RefinedQuad::zero(al);
  if (auto* s = std::get_if<double>(&v)) {
    r.a = *s;
    return r;
  }
  if (auto* n = std::get_if<ind::NeutroNumber>(&v)) {
    r.a = n->a;
    if (n->b != 0.0) {
      lit::Lit nl = quad::normalize(Lit::I(), al);  // needs r == 1
      r.i[nl.index - 1] = n->b;
    }
    return r;
  }
  if (auto* n = std::get_if<ind::RefinedNumber>(&v)) {
    r.a = n->a;
    for (size_t k = 0; k < n->b.size(); ++k) {
      if (n->b[k] == 0.0) continue;
      if (static_cast<int>(k) >= al.r)
        fail(Errc::mismatch, "I" + std::to_string(k + 1) + " outside alphabet " + al.str());
      r.i[k] = n->b[k];
    }
    return r;
  }
  if (auto* q = std::get_if<quad::QuadNumber>(&v)) {
    r.a = q->a;
    auto put = [&](double coef, lit::Kind kind, std::vector<double>& slot) {
      if (coef == 0.0) return;
      lit::Lit nl = quad::normalize(lit::Lit{kind, 0}, al);
      slot[nl.index - 1] = coef;
    };
    put(q->b, lit::Kind::T, r.t);
    put(q->c, lit::Kind::I, r.i);
    put(q->d, lit::Kind::F, r.f);
    return r;
  }
  type_error("value does not embed into a refined quadruple");
}

// ---------------------------------------------------------------------------

Value scale_value(double alpha, const Value& v) {
  switch (tower_of(v)) {
    case Tower::scalar: return alpha * std::get<double>(v);
    case Tower::nn: return ind::nn_scale(alpha, std::get<ind::NeutroNumber>(v));
    case Tower::rn: return ind::rn_scale(alpha, std::get<ind::RefinedNumber>(v));
    case Tower::quad: return quad::nq_scale(alpha, std::get<quad::QuadNumber>(v));
    case Tower::rquad: return quad::rnq_scale(alpha, std::get<quad::RefinedQuad>(v));
    case Tower::dual: {
      hyper::Dual d = std::get<hyper::Dual>(v);
      d.a *= alpha;
      for (auto& c : d.b) c *= alpha;
      return d;
    }
    case Tower::hc: {
      hyper::NComplex u = std::get<hyper::NComplex>(v);
      for (auto& c : u.x) c *= alpha;
      return u;
    }
    case Tower::quat: {
      hyper::Quaternion q = std::get<hyper::Quaternion>(v);
      for (auto& c : q.c) c *= alpha;
      return q;
    }
    default: break;
  }
  fail(Errc::unsupported, "cannot scale a " + kind_name(v));
}

Tower join_tower(Tower a, Tower b, const Value& va, const Value& vb) {
  if (a == b) return a;
  if (a == Tower::scalar) return b;
  if (b == Tower::scalar) return a;
  auto literalish = [](Tower t) {
    return t == Tower::nn || t == Tower::rn || t == Tower::quad || t == Tower::rquad;
  };
  if (literalish(a) && literalish(b)) {
    if (a == Tower::rquad || b == Tower::rquad) return Tower::rquad;
    if ((a == Tower::rn && b == Tower::quad) || (a == Tower::quad && b == Tower::rn))
      return Tower::rquad;
    if (a == Tower::rn || b == Tower::rn) {
      // nn with a zero I coefficient is really a scalar
      const Value& other = a == Tower::rn ? vb : va;
      if (auto* n = std::get_if<ind::NeutroNumber>(&other); n && n->b == 0.0)
        return Tower::rn;
      if (a == Tower::nn || b == Tower::nn) return Tower::rn;  // to_rn rejects b != 0
      return Tower::rn;
    }
    return Tower::quad;  // nn + quad
  }
  type_error("cannot combine " + kind_name(va) + " and " + kind_name(vb));
}

Value arith(BinOp op, const Value& lhs, const Value& rhs, const EvalConfig& cfg) {
  if (op == BinOp::div) {
    if (!std::holds_alternative<double>(rhs))
      fail(Errc::undefined, "division by an indeterminate operand is undefined (I/I = undefined)");
    double s = std::get<double>(rhs);
    if (s == 0.0) fail(Errc::domain, "division by zero");
    if (std::holds_alternative<double>(lhs)) return std::get<double>(lhs) / s;
    return scale_value(1.0 / s, lhs);
  }

  Tower t = join_tower(tower_of(lhs), tower_of(rhs), lhs, rhs);
  switch (t) {
    case Tower::scalar: {
      double a = std::get<double>(lhs), b = std::get<double>(rhs);
      switch (op) {
        case BinOp::add: return a + b;
        case BinOp::sub: return a - b;
        case BinOp::mul: return a * b;
        default: break;
      }
      break;
    }
    case Tower::nn: {
      auto a = to_nn(lhs), b = to_nn(rhs);
      switch (op) {
        case BinOp::add: return ind::nn_add(a, b);
        case BinOp::sub: return ind::nn_sub(a, b);
        case BinOp::mul: return ind::nn_mul(a, b);
        default: break;
      }
      break;
    }
    case Tower::rn: {
      auto a = to_rn(lhs, cfg), b = to_rn(rhs, cfg);
      switch (op) {
        case BinOp::add: return ind::rn_add(a, b);
        case BinOp::sub: return ind::rn_sub(a, b);
        case BinOp::mul: return ind::rn_mul(a, b);
        default: break;
      }
      break;
    }
    case Tower::quad: {
      auto a = to_quad(lhs), b = to_quad(rhs);
      switch (op) {
        case BinOp::add: return quad::nq_add(a, b);
        case BinOp::sub: return quad::nq_sub(a, b);
        case BinOp::mul: return quad::nq_mul(cfg.coarse_order(), a, b);
        default: break;
      }
      break;
    }
    case Tower::rquad: {
      auto a = to_rquad(lhs, cfg), b = to_rquad(rhs, cfg);
      switch (op) {
        case BinOp::add: return quad::rnq_add(a, b);
        case BinOp::sub: return quad::rnq_sub(a, b);
        case BinOp::mul: return quad::rnq_mul(cfg.refined_order(), a, b);
        default: break;
      }
      break;
    }
    case Tower::dual: {
      auto a = std::get<hyper::Dual>(lhs), b = std::get<hyper::Dual>(rhs);
      switch (op) {
        case BinOp::add: return hyper::dual_add(a, b);
        case BinOp::sub: return hyper::dual_add(a, std::get<hyper::Dual>(scale_value(-1, Value(b))));
        case BinOp::mul: return hyper::dual_mul(a, b);
        default: break;
      }
      break;
    }
    case Tower::hc: {
      auto a = std::get<hyper::NComplex>(lhs), b = std::get<hyper::NComplex>(rhs);
      switch (op) {
        case BinOp::add: return hyper::hc_add(a, b);
        case BinOp::sub: return hyper::hc_add(a, std::get<hyper::NComplex>(scale_value(-1, Value(b))));
        case BinOp::mul: return hyper::hc_mul(a, b);
        default: break;
      }
      break;
    }
    case Tower::quat: {
      auto a = std::get<hyper::Quaternion>(lhs), b = std::get<hyper::Quaternion>(rhs);
      switch (op) {
        case BinOp::add: return hyper::quat_add(a, b);
        case BinOp::sub: return hyper::quat_add(a, std::get<hyper::Quaternion>(scale_value(-1, Value(b))));
        case BinOp::mul: return hyper::quat_mul(a, b);
        default: break;
      }
      break;
    }
    default: break;
  }
  fail(Errc::unsupported, "operator " + std::string(binop_text(op)) + " not defined here");
}

// scalar mixes with dual/hc/quat need the scalar embedded first
Value embed_for_special(const Value& v, Tower target, const EvalConfig& cfg) {
  if (tower_of(v) != Tower::scalar) return v;
  double s = std::get<double>(v);
  switch (target) {
    case Tower::dual: return hyper::Dual{cfg.dual_family, s, {0.0}};
    case Tower::hc: {
      if (cfg.hc_dim < 2)
        fail(Errc::domain, "set a hypercomplex dimension first (:dim <n>)");
      std::vector<double> c(cfg.hc_dim, 0.0);
      c[0] = s;
      return hyper::NComplex(std::move(c));
    }
    case Tower::quat: return hyper::Quaternion{{s, 0, 0, 0}};
    default: return v;
  }
}

// ---------------------------------------------------------------------------
// logical operators
// ---------------------------------------------------------------------------

const lit::Table& table_for(BinOp op, const EvalConfig& cfg) {
  switch (op) {
    case BinOp::and_: return cfg.and_table;
    case BinOp::or_: return cfg.or_table;
    case BinOp::xor_: return cfg.xor_table;
    case BinOp::nand_: return cfg.sheffer_table;
    case BinOp::implies: return cfg.implies_table;
    case BinOp::equiv: return cfg.equiv_table;
    default: fail(Errc::unsupported, "not a table operator");
  }
}

Value logical(BinOp op, const Value& lhs, const Value& rhs, const EvalConfig& cfg) {
  // triples
  if (std::holds_alternative<tif::Triple>(lhs) && std::holds_alternative<tif::Triple>(rhs)) {
    const auto& a = std::get<tif::Triple>(lhs);
    const auto& b = std::get<tif::Triple>(rhs);
    switch (op) {
      case BinOp::and_: return tif::conjoin(cfg.conj, a, b);
      case BinOp::or_: return tif::disjoin(cfg.disj, a, b);
      case BinOp::implies: return tif::implies(cfg.impl, a, b);
      case BinOp::equiv:
        return tif::conjoin(cfg.conj, tif::implies(cfg.impl, a, b),
                            tif::implies(cfg.impl, b, a));
      default:
        fail(Errc::unsupported,
             std::string(binop_text(op)) + " is not defined on (t,i,f) triples");
    }
  }
  if (std::holds_alternative<tif::TfPair>(lhs) && std::holds_alternative<tif::TfPair>(rhs)) {
    if (op == BinOp::implies)
      return tif::if_implies(std::get<tif::TfPair>(lhs), std::get<tif::TfPair>(rhs));
    fail(Errc::unsupported, "only -> is defined on (t,f) pairs");
  }
  if (std::holds_alternative<tif::IntervalTriple>(lhs) ||
      std::holds_alternative<tif::IntervalTriple>(rhs))
    fail(Errc::unsupported, "interval operands unsupported");
  if (std::holds_alternative<Formula>(lhs) && std::holds_alternative<Formula>(rhs)) {
    const auto& fa = std::get<Formula>(lhs);
    const auto& fb = std::get<Formula>(rhs);
    if (!fa.is_leaf() || !fb.is_leaf())
      fail(Errc::unsupported, "literal tables apply to plain literals, not composites");
    Lit a = fa.as_leaf(), b = fb.as_leaf();
    if (!a.refined() && !b.refined())
      return Formula::leaf(table_for(op, cfg).apply(a, b));
    if (op == BinOp::and_ || op == BinOp::or_) {
      auto kind = op == BinOp::and_ ? lit::OpKind::conj : lit::OpKind::disj;
      return lit::refined_apply(kind, a, b);
    }
    fail(Errc::unsupported, "no refined table for " + std::string(binop_text(op)));
  }
  type_error("cannot apply " + std::string(binop_text(op)) + " to " + kind_name(lhs) +
             " and " + kind_name(rhs));
}

// ---------------------------------------------------------------------------

struct Evaluator {
  const EvalConfig& cfg;

  Value binary(BinOp op, const Value& lhs, const Value& rhs) const {
    switch (op) {
      case BinOp::add:
      case BinOp::sub:
      case BinOp::mul:
      case BinOp::div: {
        if (op == BinOp::mul && std::holds_alternative<tif::Weighted>(lhs) &&
            std::holds_alternative<tif::Weighted>(rhs))
          return tif::star(std::get<tif::Weighted>(lhs), std::get<tif::Weighted>(rhs));
        if (op == BinOp::mul && std::holds_alternative<tif::Triple>(lhs) &&
            std::holds_alternative<tif::Triple>(rhs))
          return tif::mul_conjoin(std::get<tif::Triple>(lhs), std::get<tif::Triple>(rhs));
        if (std::holds_alternative<tif::IntervalTriple>(lhs) ||
            std::holds_alternative<tif::IntervalTriple>(rhs))
          fail(Errc::unsupported, "interval operands unsupported");
        Value a = numeric(lhs), b = numeric(rhs);
        Tower ta = tower_of(a), tb = tower_of(b);
        if (ta == Tower::dual || tb == Tower::dual) {
          a = embed_for_special(a, Tower::dual, cfg);
          b = embed_for_special(b, Tower::dual, cfg);
        } else if (ta == Tower::hc || tb == Tower::hc) {
          a = embed_for_special(a, Tower::hc, cfg);
          b = embed_for_special(b, Tower::hc, cfg);
        } else if (ta == Tower::quat || tb == Tower::quat) {
          a = embed_for_special(a, Tower::quat, cfg);
          b = embed_for_special(b, Tower::quat, cfg);
        }
        return arith(op, a, b, cfg);
      }
      default: return logical(op, lhs, rhs, cfg);
    }
  }

  // literal leaves become numeric units inside + - * /
  Value numeric(const Value& v) const {
    if (auto* f = std::get_if<Formula>(&v)) {
      if (!f->is_leaf())
        fail(Errc::unsupported, "the formula " + f->str() + " has no numeric meaning");
      return literal_unit(f->as_leaf(), 1.0, cfg);
    }
    return v;
  }

  Value unary(UnOp op, const Value& v) const {
    switch (op) {
      case UnOp::minus:
        if (std::holds_alternative<tif::Triple>(v) || std::holds_alternative<Formula>(v) ||
            std::holds_alternative<tif::TfPair>(v))
          fail(Errc::unsupported, "use ! for logical negation");
        return scale_value(-1.0, v);
      case UnOp::lognot: {
        if (auto* t = std::get_if<tif::Triple>(&v)) return tif::negate(cfg.neg, *t);
        if (std::holds_alternative<tif::IntervalTriple>(v))
          fail(Errc::unsupported, "interval operands unsupported");
        if (auto* f = std::get_if<Formula>(&v)) {
          if (!f->is_leaf())
            fail(Errc::unsupported, "table negation applies to plain literals");
          Lit l = f->as_leaf();
          if (!l.refined()) return Formula::leaf(cfg.neg_table.apply(l));
          return lit::refined_negate(l);
        }
        fail(Errc::unsupported, "cannot negate a " + kind_name(v));
      }
      case UnOp::neut:
      case UnOp::anti:
      case UnOp::non: {
        auto* f = std::get_if<Formula>(&v);
        if (!f || !f->is_leaf() || f->as_leaf().refined())
          fail(Errc::unsupported, "actions apply to plain T, I, F");
        auto a = op == UnOp::neut ? lit::Action::neut
                 : op == UnOp::anti ? lit::Action::anti
                                    : lit::Action::non;
        return lit::act(a, f->as_leaf());
      }
    }
    fail(Errc::unsupported, "bad unary operator");
  }
};

double want_scalar(const Value& v, const std::string& what) {
  if (auto* s = std::get_if<double>(&v)) return *s;
  fail(Errc::mismatch, what + " must be a scalar, got " + kind_name(v));
}

Value call(const std::string& name, const std::vector<Value>& args, const EvalConfig& cfg) {
  auto argc = [&](size_t n) {
    if (args.size() != n)
      fail(Errc::mismatch, name + " takes " + std::to_string(n) + " argument(s)");
  };
  if (name == "sqrt") {
    argc(1);
    double x = want_scalar(args[0], "sqrt argument");
    if (x < 0) fail(Errc::domain, "sqrt of a negative number");
    return std::sqrt(x);
  }
  if (name == "cbrt") {
    argc(1);
    return std::cbrt(want_scalar(args[0], "cbrt argument"));
  }
  if (name == "d2") {
    argc(2);
    auto* a = std::get_if<tif::Triple>(&args[0]);
    auto* b = std::get_if<tif::Triple>(&args[1]);
    if (!a || !b) fail(Errc::mismatch, "d2 compares two (t,i,f) triples");
    return tif::contradiction_degree(*a, *b);
  }
  if (name == "sharp") {
    argc(2);
    auto as_nn = [](const Value& v) -> ind::NeutroNumber {
      if (auto* s = std::get_if<double>(&v)) return {*s, 0};
      if (auto* n = std::get_if<ind::NeutroNumber>(&v)) return *n;
      fail(Errc::mismatch, "sharp works on a+bI numbers");
    };
    return ind::law_sharp(as_nn(args[0]), as_nn(args[1]));
  }
  if (name == "decompose") {
    if (args.size() != 2 && args.size() != 3)
      fail(Errc::mismatch, "decompose(x, digits[, scale])");
    double x = want_scalar(args[0], "decompose value");
    double dd = want_scalar(args[1], "digit count");
    int digits = static_cast<int>(dd);
    if (digits < 0 || digits != dd) fail(Errc::domain, "digit count must be a whole number >= 0");
    double scale = args.size() == 3 ? want_scalar(args[2], "scale") : 1.0;
    return ind::decompose_real(x, digits, scale);
  }
  if (name == "absorb") {
    argc(2);
    auto leaf = [](const Value& v) -> Lit {
      auto* f = std::get_if<Formula>(&v);
      if (!f || !f->is_leaf()) fail(Errc::mismatch, "absorb works on literal symbols");
      return f->as_leaf();
    };
    Lit a = leaf(args[0]), b = leaf(args[1]);
    Lit win;
    if (!a.refined() && !b.refined() && !cfg.order_is_refined()) {
      win = quad::absorb(cfg.order, a, b);
    } else {
      const quad::Alphabet& al = cfg.alphabet;
      win = quad::absorb(cfg.refined_order(), quad::normalize(a, al),
                         quad::normalize(b, al));
      // one-member classes read better unindexed
      int size = win.kind == lit::Kind::T ? al.p : win.kind == lit::Kind::I ? al.r : al.s;
      if (size == 1) win.index = 0;
    }
    return Formula::leaf(win);
  }
  fail(Errc::unknown_symbol, "unknown function '" + name + "'");
}

// venn() reads its argument structurally: T&F is the conjunction itself, not
// whatever the active truth table folds it into
Formula formula_of_ast(const Ast& a) {
  switch (a->kind) {
    case Node::Kind::symbol: {
      auto l = lit::parse_lit(a->text);
      if (!l) break;
      return Formula::leaf(*l);
    }
    case Node::Kind::unary:
      if (a->un == UnOp::lognot) return Formula::neg(formula_of_ast(a->kids[0]));
      break;
    case Node::Kind::binary: {
      Formula lhs = formula_of_ast(a->kids[0]);
      Formula rhs = formula_of_ast(a->kids[1]);
      switch (a->bin) {
        case BinOp::and_: return Formula::conj({lhs, rhs});
        case BinOp::or_: return Formula::disj({lhs, rhs});
        case BinOp::xor_:
          return Formula::disj({Formula::conj({lhs, Formula::neg(rhs)}),
                                Formula::conj({Formula::neg(lhs), rhs})});
        default: break;
      }
      break;
    }
    default: break;
  }
  fail(Errc::mismatch, "venn takes a formula over T and F with & | ^ !");
}

Value eval_node(const Ast& a, const EvalConfig& cfg);

Value tuple_value(const Ast& a, const EvalConfig& cfg) {
  bool interval = false;
  for (const auto& k : a->kids)
    if (k->kind == Node::Kind::interval) interval = true;
  auto scalar_of = [&](const Ast& k) {
    return want_scalar(eval_node(k, cfg), "tuple component");
  };
  if (a->kids.size() == 2) {
    if (interval) fail(Errc::unsupported, "interval pairs are not a value");
    return tif::TfPair{scalar_of(a->kids[0]), scalar_of(a->kids[1])};
  }
  if (!interval)
    return tif::Triple{scalar_of(a->kids[0]), scalar_of(a->kids[1]), scalar_of(a->kids[2])};
  auto comp = [&](const Ast& k) -> Interval {
    if (k->kind == Node::Kind::interval)
      return {scalar_of(k->kids[0]), scalar_of(k->kids[1])};
    double v = scalar_of(k);
    return {v, v};
  };
  return tif::IntervalTriple{comp(a->kids[0]), comp(a->kids[1]), comp(a->kids[2])};
}

Value eval_node(const Ast& a, const EvalConfig& cfg) {
  Evaluator ev{cfg};
  switch (a->kind) {
    case Node::Kind::number: return a->num;
    case Node::Kind::ident: {
      if (a->text == "pi") return std::numbers::pi;
      if (a->text == "e") return std::numbers::e;
      fail(Errc::unknown_symbol, "unknown symbol '" + a->text + "'");
    }
    case Node::Kind::symbol:
    case Node::Kind::scaled: {
      double coef = a->kind == Node::Kind::scaled ? a->num : 1.0;
      const std::string& s = a->text;
      if (auto l = lit::parse_lit(s)) {
        if (a->kind == Node::Kind::symbol) return Formula::leaf(*l);
        return literal_unit(*l, coef, cfg);
      }
      if (s == "g") return hyper::Dual{cfg.dual_family, 0, {coef}};
      if (s == "i") return hyper::Quaternion{{0, coef, 0, 0}};
      if (s == "j") return hyper::Quaternion{{0, 0, coef, 0}};
      if (s == "k") return hyper::Quaternion{{0, 0, 0, coef}};
      if (s[0] == 'h') {
        int idx = std::stoi(s.substr(1));
        if (cfg.hc_dim < 2)
          fail(Errc::domain, "set a hypercomplex dimension first (:dim <n>)");
        if (idx >= cfg.hc_dim)
          fail(Errc::domain, s + " outside dimension " + std::to_string(cfg.hc_dim));
        hyper::NComplex u = hyper::NComplex::unit(cfg.hc_dim, idx);
        for (auto& c : u.x) c *= coef;
        return u;
      }
      fail(Errc::unknown_symbol, "unknown symbol '" + s + "'");
    }
    case Node::Kind::tuple: return tuple_value(a, cfg);
    case Node::Kind::interval:
      fail(Errc::unsupported, "interval literals live inside (t,i,f) components");
    case Node::Kind::weighted: {
      Value t = tuple_value(a, cfg);
      auto* tr = std::get_if<tif::Triple>(&t);
      if (!tr) fail(Errc::mismatch, "a weighted value needs a scalar (t,i,f) triple");
      return tif::Weighted{a->num, *tr};
    }
    case Node::Kind::unary: return ev.unary(a->un, eval_node(a->kids[0], cfg));
    case Node::Kind::binary:
      return ev.binary(a->bin, eval_node(a->kids[0], cfg), eval_node(a->kids[1], cfg));
    case Node::Kind::call: {
      if (a->text == "venn") {
        if (a->kids.size() != 1) fail(Errc::mismatch, "venn takes 1 argument");
        return ind::venn_regions(formula_of_ast(a->kids[0]));
      }
      std::vector<Value> args;
      args.reserve(a->kids.size());
      for (const auto& k : a->kids) args.push_back(eval_node(k, cfg));
      return call(a->text, args, cfg);
    }
  }
  fail(Errc::unsupported, "bad node");
}

}  // namespace

Value eval(const Ast& a, const EvalConfig& cfg) { return eval_node(a, cfg); }

}  // namespace nsym::expr
