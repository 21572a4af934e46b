#include "nsym/expr/ast.hpp"

#include "nsym/format.hpp"

namespace nsym::expr {

namespace {

std::shared_ptr<Node> fresh(Node::Kind k) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  return n;
}

}  // namespace

Ast make_number(double v) {
  auto n = fresh(Node::Kind::number);
  n->num = v;
  return n;
}

Ast make_symbol(std::string name) {
  auto n = fresh(Node::Kind::symbol);
  n->text = std::move(name);
  return n;
}

Ast make_ident(std::string name) {
  auto n = fresh(Node::Kind::ident);
  n->text = std::move(name);
  return n;
}

Ast make_scaled(double coef, std::string name) {
  auto n = fresh(Node::Kind::scaled);
  n->num = coef;
  n->text = std::move(name);
  return n;
}

Ast make_tuple(std::vector<Ast> elems) {
  auto n = fresh(Node::Kind::tuple);
  n->kids = std::move(elems);
  return n;
}

Ast make_interval(Ast lo, Ast hi) {
  auto n = fresh(Node::Kind::interval);
  n->kids = {std::move(lo), std::move(hi)};
  return n;
}

Ast make_weighted(double carrier, std::vector<Ast> elems) {
  auto n = fresh(Node::Kind::weighted);
  n->num = carrier;
  n->kids = std::move(elems);
  return n;
}

Ast make_unary(UnOp op, Ast sub) {
  auto n = fresh(Node::Kind::unary);
  n->un = op;
  n->kids = {std::move(sub)};
  return n;
}

Ast make_binary(BinOp op, Ast lhs, Ast rhs) {
  auto n = fresh(Node::Kind::binary);
  n->bin = op;
  n->kids = {std::move(lhs), std::move(rhs)};
  return n;
}

Ast make_call(std::string name, std::vector<Ast> args) {
  auto n = fresh(Node::Kind::call);
  n->text = std::move(name);
  n->kids = std::move(args);
  return n;
}

bool ast_equal(const Ast& a, const Ast& b) {
  if (!a || !b) return a == b;
  if (a->kind != b->kind || a->num != b->num || a->text != b->text) return false;
  if (a->kind == Node::Kind::unary && a->un != b->un) return false;
  if (a->kind == Node::Kind::binary && a->bin != b->bin) return false;
  if (a->kids.size() != b->kids.size()) return false;
  for (size_t k = 0; k < a->kids.size(); ++k)
    if (!ast_equal(a->kids[k], b->kids[k])) return false;
  return true;
}

const char* binop_text(BinOp op) {
  switch (op) {
    case BinOp::add: return "+";
    case BinOp::sub: return "-";
    case BinOp::mul: return "*";
    case BinOp::div: return "/";
    case BinOp::and_: return "&";
    case BinOp::xor_: return "^";
    case BinOp::or_: return "|";
    case BinOp::nand_: return "nand";
    case BinOp::implies: return "->";
    case BinOp::equiv: return "<->";
  }
  return "?";
}

const char* unop_text(UnOp op) {
  switch (op) {
    case UnOp::lognot: return "!";
    case UnOp::minus: return "-";
    case UnOp::neut: return "neut";
    case UnOp::anti: return "anti";
    case UnOp::non: return "non";
  }
  return "?";
}

namespace {

// matches the parser's binding powers
int prec(BinOp op) {
  switch (op) {
    case BinOp::mul:
    case BinOp::div: return 80;
    case BinOp::add:
    case BinOp::sub: return 70;
    case BinOp::and_:
    case BinOp::nand_: return 60;
    case BinOp::xor_: return 50;
    case BinOp::or_: return 40;
    case BinOp::implies: return 30;
    case BinOp::equiv: return 20;
  }
  return 0;
}

constexpr int kUnaryPrec = 90;

int node_prec(const Ast& a) {
  switch (a->kind) {
    case Node::Kind::binary: return prec(a->bin);
    case Node::Kind::unary:
      return a->un == UnOp::lognot || a->un == UnOp::minus ? kUnaryPrec : 100;
    default: return 100;
  }
}

void print_to(const Ast& a, std::string& out);

// needs_ge: child must bind at least as tight (strictly tighter when false is
// passed for the recursing side of a left-associative chain)
void print_child(const Ast& child, int min_prec, std::string& out) {
  bool paren = node_prec(child) < min_prec;
  if (paren) out += "(";
  print_to(child, out);
  if (paren) out += ")";
}

void print_to(const Ast& a, std::string& out) {
  switch (a->kind) {
    case Node::Kind::number: out += fmt_real(a->num); return;
    case Node::Kind::symbol:
    case Node::Kind::ident: out += a->text; return;
    case Node::Kind::scaled:
      out += fmt_real(a->num);
      out += a->text;
      return;
    case Node::Kind::tuple: {
      out += "(";
      for (size_t k = 0; k < a->kids.size(); ++k) {
        if (k) out += ",";
        print_to(a->kids[k], out);
      }
      out += ")";
      return;
    }
    case Node::Kind::interval: {
      out += "[";
      print_to(a->kids[0], out);
      out += ",";
      print_to(a->kids[1], out);
      out += "]";
      return;
    }
    case Node::Kind::weighted: {
      out += fmt_real(a->num);
      out += "(";
      for (size_t k = 0; k < a->kids.size(); ++k) {
        if (k) out += ",";
        print_to(a->kids[k], out);
      }
      out += ")";
      return;
    }
    case Node::Kind::unary: {
      if (a->un == UnOp::lognot || a->un == UnOp::minus) {
        out += unop_text(a->un);
        // a negative number directly under unary minus would lex as one token
        bool paren = node_prec(a->kids[0]) < kUnaryPrec ||
                     (a->un == UnOp::minus && a->kids[0]->kind == Node::Kind::unary &&
                      a->kids[0]->un == UnOp::minus);
        if (paren) out += "(";
        print_to(a->kids[0], out);
        if (paren) out += ")";
      } else {
        out += unop_text(a->un);
        out += "(";
        print_to(a->kids[0], out);
        out += ")";
      }
      return;
    }
    case Node::Kind::binary: {
      int p = prec(a->bin);
      bool right_assoc = a->bin == BinOp::implies;
      print_child(a->kids[0], right_assoc ? p + 1 : p, out);
      if (a->bin == BinOp::nand_)
        out += " nand ";
      else
        out += binop_text(a->bin);
      print_child(a->kids[1], right_assoc ? p : p + 1, out);
      return;
    }
    case Node::Kind::call: {
      out += a->text;
      out += "(";
      for (size_t k = 0; k < a->kids.size(); ++k) {
        if (k) out += ",";
        print_to(a->kids[k], out);
      }
      out += ")";
      return;
    }
  }
}

}  // namespace

std::string print(const Ast& a) {
  std::string out;
  print_to(a, out);
  return out;
}

}  // namespace nsym::expr
