#include "nsym/expr/parser.hpp"

#include <optional>

#include "nsym/expr/lexer.hpp"

namespace nsym::expr {

namespace {

struct InfixInfo {
  BinOp op;
  int lbp;
  int rbp;  // rbp == lbp means right-associative
};

std::optional<InfixInfo> infix(const Token& t) {
  using K = Token::Kind;
  switch (t.kind) {
    case K::star: return InfixInfo{BinOp::mul, 80, 81};
    case K::slash: return InfixInfo{BinOp::div, 80, 81};
    case K::plus: return InfixInfo{BinOp::add, 70, 71};
    case K::minus: return InfixInfo{BinOp::sub, 70, 71};
    case K::amp: return InfixInfo{BinOp::and_, 60, 61};
    case K::caret: return InfixInfo{BinOp::xor_, 50, 51};
    case K::pipe: return InfixInfo{BinOp::or_, 40, 41};
    case K::arrow: return InfixInfo{BinOp::implies, 30, 30};
    case K::equiv: return InfixInfo{BinOp::equiv, 20, 21};
    case K::ident:
      if (t.text == "nand") return InfixInfo{BinOp::nand_, 60, 61};
      return std::nullopt;
    default: return std::nullopt;
  }
}

const std::vector<std::string> kExprExpected = {
    "a number", "a symbol", "'('", "'!'", "'-'", "'neut'", "'anti'", "'non'"};

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  Ast run() {
    Ast e = expression(0);
    if (peek().kind != Token::Kind::end)
      error("unexpected " + describe(peek()), {"an operator", "end of input"});
    return e;
  }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;

  const Token& peek(int ahead = 0) const {
    size_t k = pos_ + ahead;
    return k < toks_.size() ? toks_[k] : toks_.back();
  }
  Token advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void error(const std::string& msg, std::vector<std::string> expected = {}) const {
    const Token& t = peek();
    throw ParseError({t.line, t.col, msg, std::move(expected)});
  }

  static std::string describe(const Token& t) {
    if (t.kind == Token::Kind::end) return "end of input";
    return "'" + t.text + "'";
  }

  void expect(Token::Kind k, const std::string& what) {
    if (peek().kind != k) error("unexpected " + describe(peek()), {what});
    advance();
  }

  Ast expression(int min_bp) {
    Ast lhs = prefix();
    for (;;) {
      auto in = infix(peek());
      if (!in || in->lbp < min_bp) break;
      advance();
      Ast rhs = expression(in->rbp);
      lhs = make_binary(in->op, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Ast prefix() {
    const Token& t = peek();
    using K = Token::Kind;
    switch (t.kind) {
      case K::bang: advance(); return make_unary(UnOp::lognot, prefix());
      case K::minus: advance(); return make_unary(UnOp::minus, prefix());
      case K::ident:
        if (t.text == "neut" || t.text == "anti" || t.text == "non") {
          UnOp op = t.text == "neut" ? UnOp::neut : t.text == "anti" ? UnOp::anti : UnOp::non;
          advance();
          return make_unary(op, prefix());
        }
        return primary();
      default: return primary();
    }
  }

  Ast primary() {
    const Token& t = peek();
    using K = Token::Kind;
    switch (t.kind) {
      case K::number: {
        double v = t.num;
        advance();
        // juxtaposition: "5I" scales a unit symbol; "3(...)" is a weighted
        // triple or, with a single component, a plain product
        if (peek().kind == K::symbol) {
          std::string name = peek().text;
          advance();
          return make_scaled(v, std::move(name));
        }
        if (peek().kind == K::lparen) {
          advance();
          std::vector<Ast> elems = component_list();
          expect(K::rparen, "')'");
          if (elems.size() == 3) return make_weighted(v, std::move(elems));
          if (elems.size() == 1)
            return make_binary(BinOp::mul, make_number(v), std::move(elems[0]));
          error("a number juxtaposed with a component list needs 1 or 3 components",
                {"(expr)", "(t,i,f)"});
        }
        return make_number(v);
      }
      case K::symbol: {
        std::string name = t.text;
        advance();
        return make_symbol(std::move(name));
      }
      case K::ident: {
        std::string name = t.text;
        if (name == "nand") error("'nand' is a binary operator", kExprExpected);
        advance();
        if (peek().kind == K::lparen) {
          advance();
          std::vector<Ast> args;
          if (peek().kind != K::rparen) {
            args.push_back(expression(0));
            while (peek().kind == K::comma) {
              advance();
              args.push_back(expression(0));
            }
          }
          expect(K::rparen, "')'");
          return make_call(std::move(name), std::move(args));
        }
        return make_ident(std::move(name));
      }
      case K::lparen: {
        advance();
        std::vector<Ast> elems = component_list();
        expect(K::rparen, "')'");
        if (elems.size() == 1) return std::move(elems[0]);
        return make_tuple(std::move(elems));
      }
      case K::lbracket:
        error("interval literals are only allowed inside a (t,i,f) component list",
              kExprExpected);
      default: error("expected expression", kExprExpected);
    }
  }

  // expr [',' expr [',' expr]] where each component may be [lo,hi]
  std::vector<Ast> component_list() {
    std::vector<Ast> elems;
    elems.push_back(component());
    while (peek().kind == Token::Kind::comma) {
      advance();
      if (elems.size() == 3) error("component lists hold at most 3 entries", {"')'"});
      elems.push_back(component());
    }
    return elems;
  }

  Ast component() {
    if (peek().kind == Token::Kind::lbracket) {
      advance();
      Ast lo = expression(0);
      expect(Token::Kind::comma, "','");
      Ast hi = expression(0);
      expect(Token::Kind::rbracket, "']'");
      return make_interval(std::move(lo), std::move(hi));
    }
    return expression(0);
  }
};

}  // namespace

Ast parse(const std::string& text) { return Parser(text).run(); }

}  // namespace nsym::expr
