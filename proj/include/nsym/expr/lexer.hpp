#pragma once

#include <string>
#include <vector>

#include "nsym/expr/parser.hpp"

namespace nsym::expr {

struct Token {
  enum class Kind {
    number,
    symbol,  // T I F T1.. g h3 i j k
    ident,   // names: pi, e, sqrt, nand, neut, ...
    lparen,
    rparen,
    lbracket,
    rbracket,
    comma,
    plus,
    minus,
    star,
    slash,
    amp,
    pipe,
    caret,
    bang,
    arrow,   // ->
    equiv,   // <->
    end,
  };

  Kind kind;
  double num = 0;
  std::string text;
  int line = 1, col = 1;
};

std::vector<Token> lex(const std::string& text);

}  // namespace nsym::expr
