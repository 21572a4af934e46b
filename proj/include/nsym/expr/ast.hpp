#pragma once

#include <memory>
#include <string>
#include <vector>

namespace nsym::expr {

enum class BinOp { add, sub, mul, div, and_, xor_, or_, nand_, implies, equiv };
enum class UnOp { lognot, minus, neut, anti, non };

struct Node;
using Ast = std::shared_ptr<const Node>;

/// Expression tree. Tuples hold 2 or 3 components (pairs and triples), whose
/// entries may be interval nodes; weighted nodes are a number juxtaposed with
/// a triple; scaled nodes are a number juxtaposed with a unit symbol ("5I").
struct Node {
  enum class Kind {
    number,
    symbol,    // T, I2, F1, g, h3, i, j, k
    ident,     // pi, e and call names
    scaled,    // num + text
    tuple,     // kids 2..3
    interval,  // kids lo, hi; only inside tuple
    weighted,  // num + kids t,i,f
    unary,     // un + kids[0]
    binary,    // bin + kids[0..1]
    call,      // text + kids
  };

  Kind kind;
  double num = 0;
  std::string text;
  UnOp un{};
  BinOp bin{};
  std::vector<Ast> kids;
};

Ast make_number(double v);
Ast make_symbol(std::string name);
Ast make_ident(std::string name);
Ast make_scaled(double coef, std::string name);
Ast make_tuple(std::vector<Ast> elems);
Ast make_interval(Ast lo, Ast hi);
Ast make_weighted(double carrier, std::vector<Ast> elems);
Ast make_unary(UnOp op, Ast sub);
Ast make_binary(BinOp op, Ast lhs, Ast rhs);
Ast make_call(std::string name, std::vector<Ast> args);

bool ast_equal(const Ast& a, const Ast& b);

/// Canonical, reparseable text. parse(print(parse(s))) is structurally equal
/// to parse(s).
std::string print(const Ast& a);

const char* binop_text(BinOp op);
const char* unop_text(UnOp op);

}  // namespace nsym::expr
