#pragma once

#include <array>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gaugekit/jet.hpp"

namespace gaugekit {

/// A point of the 4-dimensional spacetime, coordinates x0..x3.
struct SamplePoint {
  std::array<double, 4> x{};
};

/// Immutable scalar expression tree over the coordinates x0..x3.
/// Node set: constant, coordinate, add, multiply, negate, power (non-negative
/// integer exponent), sin, cos, exp.
class CoordExpr {
 public:
  CoordExpr() : CoordExpr(constant(0.0)) {}

  static CoordExpr constant(double v) {
    return CoordExpr(std::make_shared<Node>(Node{Kind::Constant, v, 0, {}}));
  }
  static CoordExpr coordinate(int axis) {
    if (axis < 0 || axis > 3) throw std::invalid_argument("coordinate axis out of range");
    return CoordExpr(std::make_shared<Node>(Node{Kind::Coordinate, 0.0, axis, {}}));
  }

  friend CoordExpr operator+(const CoordExpr& a, const CoordExpr& b) {
    return CoordExpr(std::make_shared<Node>(Node{Kind::Add, 0.0, 0, {a.node_, b.node_}}));
  }
  friend CoordExpr operator*(const CoordExpr& a, const CoordExpr& b) {
    return CoordExpr(std::make_shared<Node>(Node{Kind::Mul, 0.0, 0, {a.node_, b.node_}}));
  }
  friend CoordExpr operator-(const CoordExpr& a) {
    return CoordExpr(std::make_shared<Node>(Node{Kind::Neg, 0.0, 0, {a.node_}}));
  }
  friend CoordExpr operator-(const CoordExpr& a, const CoordExpr& b) { return a + (-b); }

  static CoordExpr pow(const CoordExpr& a, int exponent) {
    if (exponent < 0) throw std::invalid_argument("power exponent must be non-negative");
    return CoordExpr(std::make_shared<Node>(Node{Kind::Pow, 0.0, exponent, {a.node_}}));
  }

  friend CoordExpr sin(const CoordExpr& a) {
    return CoordExpr(std::make_shared<Node>(Node{Kind::Sin, 0.0, 0, {a.node_}}));
  }
  friend CoordExpr cos(const CoordExpr& a) {
    return CoordExpr(std::make_shared<Node>(Node{Kind::Cos, 0.0, 0, {a.node_}}));
  }
  friend CoordExpr exp(const CoordExpr& a) {
    return CoordExpr(std::make_shared<Node>(Node{Kind::Exp, 0.0, 0, {a.node_}}));
  }

  double value_at(const SamplePoint& p) const { return eval_value(*node_, p); }

  Jet2<double> jet_at(const SamplePoint& p) const { return eval_jet(*node_, p); }

 private:
  enum class Kind { Constant, Coordinate, Add, Mul, Neg, Pow, Sin, Cos, Exp };

  struct Node {
    Kind kind;
    double value;   // Constant
    int index;      // Coordinate axis or Pow exponent
    std::vector<std::shared_ptr<const Node>> children;
  };

  explicit CoordExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static double eval_value(const Node& n, const SamplePoint& p) {
    switch (n.kind) {
      case Kind::Constant: return n.value;
      case Kind::Coordinate: return p.x[static_cast<std::size_t>(n.index)];
      case Kind::Add: return eval_value(*n.children[0], p) + eval_value(*n.children[1], p);
      case Kind::Mul: return eval_value(*n.children[0], p) * eval_value(*n.children[1], p);
      case Kind::Neg: return -eval_value(*n.children[0], p);
      case Kind::Pow: return ipow(eval_value(*n.children[0], p), n.index);
      case Kind::Sin: return std::sin(eval_value(*n.children[0], p));
      case Kind::Cos: return std::cos(eval_value(*n.children[0], p));
      case Kind::Exp: return std::exp(eval_value(*n.children[0], p));
    }
    return 0.0;
  }

  static Jet2<double> eval_jet(const Node& n, const SamplePoint& p) {
    switch (n.kind) {
      case Kind::Constant: return Jet2<double>::constant(n.value);
      case Kind::Coordinate:
        return Jet2<double>::coordinate(p.x[static_cast<std::size_t>(n.index)], n.index);
      case Kind::Add: return eval_jet(*n.children[0], p) + eval_jet(*n.children[1], p);
      case Kind::Mul: return eval_jet(*n.children[0], p) * eval_jet(*n.children[1], p);
      case Kind::Neg: return -eval_jet(*n.children[0], p);
      case Kind::Pow: return gaugekit::pow(eval_jet(*n.children[0], p), n.index);
      case Kind::Sin: return sin(eval_jet(*n.children[0], p));
      case Kind::Cos: return cos(eval_jet(*n.children[0], p));
      case Kind::Exp: return exp(eval_jet(*n.children[0], p));
    }
    return {};
  }

  std::shared_ptr<const Node> node_;
};

/// Forward propagation of value, gradient and symmetric Hessian through the
/// expression tree; exact to rounding.
inline Jet2<double> eval_jet(const CoordExpr& e, const SamplePoint& x) {
  return e.jet_at(x);
}

/// Central difference (e(x + h e_mu) - e(x - h e_mu)) / 2h; independent
/// O(h^2) oracle for the jet gradients.
inline double finite_difference_partial(const CoordExpr& e, int mu,
                                        const SamplePoint& x, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite difference step must be positive");
  SamplePoint hi = x, lo = x;
  hi.x[static_cast<std::size_t>(mu)] += h;
  lo.x[static_cast<std::size_t>(mu)] -= h;
  return (e.value_at(hi) - e.value_at(lo)) / (2.0 * h);
}

struct CoordParseError : std::runtime_error {
  CoordParseError(const std::string& message, std::size_t pos)
      : std::runtime_error(message + " at position " + std::to_string(pos)),
        position(pos) {}
  std::size_t position;
};

namespace detail {

/// Recursive-descent parser for the coordinate-expression grammar:
///   expr   := term (('+' | '-') term)*
///   term   := unary ('*' unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' integer)?
///   atom   := number | 'x0'..'x3' | ('sin'|'cos'|'exp') '(' expr ')' | '(' expr ')'
class CoordParser {
 public:
  explicit CoordParser(std::string_view text) : text_(text) {}

  CoordExpr parse() {
    CoordExpr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  CoordExpr parse_expr() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      ++pos_;
      neg = true;
    } else if (peek() == '+') {
      ++pos_;
    }
    CoordExpr e = parse_term();
    if (neg) e = -e;
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c == '+') {
        ++pos_;
        e = e + parse_term();
      } else if (c == '-') {
        ++pos_;
        e = e - parse_term();
      } else {
        return e;
      }
    }
  }

  CoordExpr parse_term() {
    CoordExpr e = parse_unary();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        e = e * parse_unary();
      } else {
        return e;
      }
    }
  }

  CoordExpr parse_unary() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      return -parse_unary();
    }
    return parse_power();
  }

  CoordExpr parse_power() {
    CoordExpr base = parse_atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == start) fail("expected non-negative integer exponent");
      const int n = std::atoi(std::string(text_.substr(start, pos_ - start)).c_str());
      return CoordExpr::pow(base, n);
    }
    return base;
  }

  CoordExpr parse_atom() {
    skip_ws();
    const std::size_t start = pos_;
    const char c = peek();
    if (c == '(') {
      ++pos_;
      CoordExpr e = parse_expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return parse_number();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() &&
             std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      const std::string_view word = text_.substr(start, pos_ - start);
      if (word.size() == 2 && word[0] == 'x' && word[1] >= '0' && word[1] <= '3') {
        return CoordExpr::coordinate(word[1] - '0');
      }
      if (word == "sin" || word == "cos" || word == "exp") {
        expect('(');
        CoordExpr arg = parse_expr();
        expect(')');
        if (word == "sin") return sin(arg);
        if (word == "cos") return cos(arg);
        return exp(arg);
      }
      pos_ = start;
      fail("unknown symbol '" + std::string(word) + "'");
    }
    fail(pos_ >= text_.size() ? "unexpected end of input" : "unexpected character");
    return CoordExpr::constant(0.0);  // unreachable
  }

  CoordExpr parse_number() {
    const char* begin = text_.data() + pos_;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) fail("malformed number");
    pos_ += static_cast<std::size_t>(end - begin);
    return CoordExpr::constant(v);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw CoordParseError(message, pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline CoordExpr parse_coord_expr(std::string_view text) {
  return detail::CoordParser(text).parse();
}

}  // namespace gaugekit
