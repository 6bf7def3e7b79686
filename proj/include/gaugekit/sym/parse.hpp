#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gaugekit/sym/expr.hpp"

namespace gaugekit::sym {

class SymParseError : public std::runtime_error {
 public:
  SymParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

// Grammar (operators over {S, Sinv, B0..B3, psi} with free derivatives
// d0..d3):
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/')? unary)*          juxtaposition multiplies
//   unary   := '-' unary | primary
//   primary := integer | 'i' | 'eps' ('^' '-'? integer)?
//            | 'S' | 'Sinv' | 'B0'..'B3' | 'psi'
//            | 'd0'..'d3'                           free derivative operator
//            | 'd0'..'d3' '(' expr ')'              derivative of the body;
//                                                   '(' must follow the token
//                                                   with no space in between
//            | '(' expr ')' | '[' expr ',' expr ']' bracket is XY - YX
// '/' requires the divisor to reduce to a single invertible scalar term.
class SymParser {
 public:
  explicit SymParser(std::string_view text) : text_(text) { lex(); }

  SymExpr parse() {
    SymExpr e = parse_expr();
    if (tok().kind != TokKind::End) fail("unexpected trailing input");
    return e;
  }

 private:
  enum class TokKind { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, LBracket, RBracket, Comma, End };
  struct Token {
    TokKind kind;
    std::string text;
    std::size_t pos;
  };

  std::string_view text_;
  std::vector<Token> toks_;
  std::size_t cursor_ = 0;

  void lex() {
    std::size_t p = 0;
    while (p < text_.size()) {
      const char c = text_[p];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++p;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t q = p;
        while (q < text_.size() && std::isdigit(static_cast<unsigned char>(text_[q]))) ++q;
        toks_.push_back({TokKind::Int, std::string(text_.substr(p, q - p)), p});
        p = q;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t q = p;
        while (q < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[q])) || text_[q] == '_')) ++q;
        toks_.push_back({TokKind::Ident, std::string(text_.substr(p, q - p)), p});
        p = q;
        continue;
      }
      TokKind k;
      switch (c) {
        case '+': k = TokKind::Plus; break;
        case '-': k = TokKind::Minus; break;
        case '*': k = TokKind::Star; break;
        case '/': k = TokKind::Slash; break;
        case '^': k = TokKind::Caret; break;
        case '(': k = TokKind::LParen; break;
        case ')': k = TokKind::RParen; break;
        case '[': k = TokKind::LBracket; break;
        case ']': k = TokKind::RBracket; break;
        case ',': k = TokKind::Comma; break;
        default:
          throw SymParseError(std::string("unexpected character '") + c + "'", p);
      }
      toks_.push_back({k, std::string(1, c), p});
      ++p;
    }
    toks_.push_back({TokKind::End, "", text_.size()});
  }

  const Token& tok(std::size_t ahead = 0) const {
    const std::size_t at = cursor_ + ahead;
    return at < toks_.size() ? toks_[at] : toks_.back();
  }
  void advance() {
    if (cursor_ + 1 < toks_.size()) ++cursor_;
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw SymParseError(message, tok().pos);
  }

  bool starts_factor(const Token& t) const {
    switch (t.kind) {
      case TokKind::Int:
      case TokKind::Ident:
      case TokKind::LParen:
      case TokKind::LBracket:
        return true;
      default:
        return false;
    }
  }

  SymExpr parse_expr() {
    SymExpr e = parse_term();
    while (tok().kind == TokKind::Plus || tok().kind == TokKind::Minus) {
      const bool plus = tok().kind == TokKind::Plus;
      advance();
      const SymExpr rhs = parse_term();
      e = plus ? e + rhs : e - rhs;
    }
    return e;
  }

  SymExpr parse_term() {
    SymExpr e = parse_unary();
    for (;;) {
      if (tok().kind == TokKind::Star) {
        advance();
        e = e * parse_unary();
      } else if (tok().kind == TokKind::Slash) {
        const std::size_t at = tok().pos;
        advance();
        e = e * expr_scalar(scalar_inverse(parse_unary(), at));
      } else if (starts_factor(tok())) {
        e = e * parse_unary();
      } else {
        return e;
      }
    }
  }

  static Coefficient scalar_inverse(const SymExpr& divisor, std::size_t at) {
    Coefficient c;
    for (const Monomial& m : divisor.terms) {
      if (!m.word.empty()) throw SymParseError("division by non-scalar expression", at);
      c = c + m.coef;
    }
    if (!c.is_invertible()) {
      throw SymParseError("division by non-invertible scalar '" + c.to_string() + "'", at);
    }
    return c.inverse();
  }

  SymExpr parse_unary() {
    if (tok().kind == TokKind::Minus) {
      advance();
      return -parse_unary();
    }
    return parse_primary();
  }

  SymExpr parse_primary() {
    const Token t = tok();
    switch (t.kind) {
      case TokKind::Int: {
        advance();
        return expr_scalar(Coefficient::integer(std::stol(t.text)));
      }
      case TokKind::LParen: {
        advance();
        SymExpr e = parse_expr();
        expect(TokKind::RParen, "expected ')'");
        return e;
      }
      case TokKind::LBracket: {
        advance();
        SymExpr x = parse_expr();
        expect(TokKind::Comma, "expected ',' in bracket");
        SymExpr y = parse_expr();
        expect(TokKind::RBracket, "expected ']'");
        return x * y - y * x;
      }
      case TokKind::Ident:
        return parse_ident(t);
      default:
        fail("expected a factor");
    }
  }

  void expect(TokKind k, const std::string& message) {
    if (tok().kind != k) fail(message);
    advance();
  }

  SymExpr parse_ident(const Token& t) {
    const std::string& name = t.text;
    if (name == "i") {
      advance();
      return expr_scalar(Coefficient::imaginary());
    }
    if (name == "eps") {
      advance();
      int power = 1;
      if (tok().kind == TokKind::Caret) {
        advance();
        int sign = 1;
        if (tok().kind == TokKind::Minus) {
          sign = -1;
          advance();
        }
        if (tok().kind != TokKind::Int) fail("expected integer exponent after '^'");
        power = sign * static_cast<int>(std::stol(tok().text));
        advance();
      }
      return expr_scalar(Coefficient::eps(power));
    }
    if (name == "S") {
      advance();
      return expr_atom(atom_S());
    }
    if (name == "Sinv") {
      advance();
      return expr_atom(atom_Sinv());
    }
    if (name == "psi") {
      advance();
      return expr_atom(atom_psi());
    }
    if (name.size() == 2 && name[0] == 'B' && name[1] >= '0' && name[1] <= '3') {
      advance();
      return expr_atom(atom_B(name[1] - '0'));
    }
    if (name.size() == 2 && name[0] == 'd' && name[1] >= '0' && name[1] <= '3') {
      const int mu = name[1] - '0';
      advance();
      // Application form requires '(' flush against the token; with a space
      // it is the free operator juxtaposed with a parenthesized factor.
      if (tok().kind == TokKind::LParen && tok().pos == t.pos + 2) {
        advance();
        SymExpr body = parse_expr();
        expect(TokKind::RParen, "expected ')'");
        return expr_deriv(mu, body);
      }
      return expr_op(mu);
    }
    throw SymParseError("unknown symbol '" + name + "'", t.pos);
  }
};

}  // namespace detail

/// Parses the expression grammar into a flat sum of monomials. Brackets and
/// written derivatives are expanded syntactically; no rewrite rules run.
inline SymExpr parse_expr(std::string_view text) {
  return detail::SymParser(text).parse();
}

}  // namespace gaugekit::sym
