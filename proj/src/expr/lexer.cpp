#include "nsym/expr/lexer.hpp"

#include <cctype>
#include <charconv>

namespace nsym::expr {

std::string Diagnostic::str() const {
  std::string s = "syntax error at line " + std::to_string(line) + ", column " +
                  std::to_string(col) + ": " + message;
  if (!expected.empty()) {
    s += " (expected ";
    for (size_t k = 0; k < expected.size(); ++k) {
      if (k) s += k + 1 == expected.size() ? " or " : ", ";
      s += expected[k];
    }
    s += ")";
  }
  return s;
}

namespace {

bool is_unit_symbol(const std::string& w) {
  if (w == "g" || w == "i" || w == "j" || w == "k") return true;
  if (w.size() >= 2 && w[0] == 'h') {
    for (size_t p = 1; p < w.size(); ++p)
      if (!std::isdigit(static_cast<unsigned char>(w[p]))) return false;
    return true;
  }
  if (w[0] == 'T' || w[0] == 'I' || w[0] == 'F') {
    for (size_t p = 1; p < w.size(); ++p)
      if (!std::isdigit(static_cast<unsigned char>(w[p]))) return false;
    return true;
  }
  return false;
}

[[noreturn]] void lex_fail(int line, int col, const std::string& msg) {
  throw ParseError({line, col, msg, {}});
}

}  // namespace

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t p = 0;
  auto push = [&](Token::Kind k, int at_col, std::string t = {}, double v = 0) {
    out.push_back({k, v, std::move(t), line, at_col});
  };
  while (p < text.size()) {
    char c = text[p];
    if (c == '\n') {
      ++line;
      col = 1;
      ++p;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++p;
      continue;
    }
    int at = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = p;
      while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
      if (p < text.size() && text[p] == '.') {
        ++p;
        if (p >= text.size() || !std::isdigit(static_cast<unsigned char>(text[p])))
          lex_fail(line, at, "digit expected after decimal point");
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
      }
      // exponent only when digits follow: "2e" stays number-then-ident
      if (p < text.size() && (text[p] == 'e' || text[p] == 'E')) {
        size_t q = p + 1;
        if (q < text.size() && (text[q] == '+' || text[q] == '-')) ++q;
        if (q < text.size() && std::isdigit(static_cast<unsigned char>(text[q]))) {
          ++q;
          while (q < text.size() && std::isdigit(static_cast<unsigned char>(text[q]))) ++q;
          p = q;
        }
      }
      double v = 0;
      auto res = std::from_chars(text.data() + start, text.data() + p, v);
      if (res.ec != std::errc{}) lex_fail(line, at, "bad number");
      col += static_cast<int>(p - start);
      push(Token::Kind::number, at, text.substr(start, p - start), v);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = p;
      while (p < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[p])) || text[p] == '_'))
        ++p;
      std::string w = text.substr(start, p - start);
      col += static_cast<int>(w.size());
      Token::Kind k = is_unit_symbol(w) ? Token::Kind::symbol : Token::Kind::ident;
      push(k, at, std::move(w));
      continue;
    }
    auto single = [&](Token::Kind k) {
      push(k, at, std::string(1, c));
      ++p;
      ++col;
    };
    switch (c) {
      case '(': single(Token::Kind::lparen); break;
      case ')': single(Token::Kind::rparen); break;
      case '[': single(Token::Kind::lbracket); break;
      case ']': single(Token::Kind::rbracket); break;
      case ',': single(Token::Kind::comma); break;
      case '+': single(Token::Kind::plus); break;
      case '*': single(Token::Kind::star); break;
      case '/': single(Token::Kind::slash); break;
      case '&': single(Token::Kind::amp); break;
      case '|': single(Token::Kind::pipe); break;
      case '^': single(Token::Kind::caret); break;
      case '!': single(Token::Kind::bang); break;
      case '-':
        if (p + 1 < text.size() && text[p + 1] == '>') {
          push(Token::Kind::arrow, at, "->");
          p += 2;
          col += 2;
        } else {
          single(Token::Kind::minus);
        }
        break;
      case '<':
        if (p + 2 < text.size() && text[p + 1] == '-' && text[p + 2] == '>') {
          push(Token::Kind::equiv, at, "<->");
          p += 3;
          col += 3;
        } else {
          lex_fail(line, at, "stray '<'");
        }
        break;
      default:
        lex_fail(line, at, std::string("unexpected character '") + c + "'");
    }
  }
  push(Token::Kind::end, col);
  return out;
}

}  // namespace nsym::expr
