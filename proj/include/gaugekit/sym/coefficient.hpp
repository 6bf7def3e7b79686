#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gaugekit::sym {

using Rational = boost::multiprecision::cpp_rational;

/// Exact element of Q(i): re + im*i.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(long n) : re(n) {}  // NOLINT: implicit by design
  explicit GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  GaussianRational inverse() const {
    if (is_zero()) throw std::domain_error("GaussianRational: division by zero");
    const Rational n = re * re + im * im;
    return {re / n, -im / n};
  }
};

/// Exact scalar of the symbolic engine: a Laurent polynomial in eps with
/// GaussianRational coefficients, kept as (eps power, value) pairs sorted by
/// power with no zero values. Closed under the sums that monomial merging
/// produces, which a single rational*i^p*eps^k term is not.
class Coefficient {
 public:
  using Term = std::pair<int, GaussianRational>;

  Coefficient() = default;

  static Coefficient zero() { return {}; }
  static Coefficient one() { return single(GaussianRational(1), 0); }
  static Coefficient integer(long n) { return single(GaussianRational(n), 0); }
  static Coefficient imaginary() { return single({Rational(0), Rational(1)}, 0); }
  static Coefficient eps(int power = 1) { return single(GaussianRational(1), power); }
  static Coefficient single(GaussianRational g, int eps_power) {
    Coefficient c;
    if (!g.is_zero()) c.terms_.emplace_back(eps_power, std::move(g));
    return c;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == GaussianRational(1);
  }
  bool is_minus_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == GaussianRational(-1);
  }

  friend Coefficient operator+(const Coefficient& a, const Coefficient& b) {
    Coefficient r = a;
    for (const auto& [k, g] : b.terms_) r.add_term(k, g);
    return r;
  }
  friend Coefficient operator-(const Coefficient& a, const Coefficient& b) {
    Coefficient r = a;
    for (const auto& [k, g] : b.terms_) r.add_term(k, -g);
    return r;
  }
  friend Coefficient operator-(const Coefficient& a) {
    Coefficient r;
    r.terms_.reserve(a.terms_.size());
    for (const auto& [k, g] : a.terms_) r.terms_.emplace_back(k, -g);
    return r;
  }
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b) {
    Coefficient r;
    for (const auto& [ka, ga] : a.terms_)
      for (const auto& [kb, gb] : b.terms_) r.add_term(ka + kb, ga * gb);
    return r;
  }
  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    return a.terms_ == b.terms_;
  }

  bool is_invertible() const { return terms_.size() == 1; }

  Coefficient inverse() const {
    if (!is_invertible()) {
      throw std::domain_error("Coefficient: only single-term scalars are invertible");
    }
    return single(terms_[0].second.inverse(), -terms_[0].first);
  }

  /// Sign of the lowest-eps-power term (real part first); 0 for zero.
  /// Drives the "a - b" versus "a + -b" choice when rendering sums.
  int leading_sign() const {
    if (terms_.empty()) return 0;
    const GaussianRational& g = terms_[0].second;
    const Rational& lead = g.re != 0 ? g.re : g.im;
    return lead > 0 ? 1 : -1;
  }

  /// Numeric value at a concrete eps.
  std::complex<double> value_at(double eps_value) const {
    std::complex<double> sum(0.0, 0.0);
    for (const auto& [k, g] : terms_) {
      double p = 1.0;
      const double base = k >= 0 ? eps_value : 1.0 / eps_value;
      for (int j = 0; j < (k >= 0 ? k : -k); ++j) p *= base;
      sum += std::complex<double>(g.re.convert_to<double>(), g.im.convert_to<double>()) * p;
    }
    return sum;
  }

  /// Renders in the expression grammar; re-parses to the same value.
  /// Multi-term sums and mixed complex values are parenthesized.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    if (terms_.size() == 1) {
      const auto& [k, g] = terms_[0];
      const bool neg = leading_sign() < 0;
      const std::string body = term_abs_string(neg ? -g : g, k);
      return neg ? "-" + body : body;
    }
    std::string out = "(";
    for (std::size_t t = 0; t < terms_.size(); ++t) {
      const auto& [k, g] = terms_[t];
      const Rational& lead = g.re != 0 ? g.re : g.im;
      const bool neg = lead < 0;
      if (t == 0) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      out += term_abs_string(neg ? -g : g, k);
    }
    return out + ")";
  }

 private:
  std::vector<Term> terms_;

  void add_term(int k, const GaussianRational& g) {
    if (g.is_zero()) return;
    auto it = terms_.begin();
    while (it != terms_.end() && it->first < k) ++it;
    if (it != terms_.end() && it->first == k) {
      it->second = it->second + g;
      if (it->second.is_zero()) terms_.erase(it);
    } else {
      terms_.emplace(it, k, g);
    }
  }

  static std::string rat_string(const Rational& r) { return r.str(); }

  static std::string eps_string(int k) {
    return k == 1 ? "eps" : "eps^" + std::to_string(k);
  }

  // Renders one (value, eps power) term whose leading sign is positive.
  static std::string term_abs_string(const GaussianRational& g, int k) {
    std::string head;
    if (g.im == 0) {
      if (g.re == 1) {
        head = k == 0 ? "1" : "";
      } else {
        head = rat_string(g.re);
      }
    } else if (g.re == 0) {
      head = g.im == 1 ? "i" : rat_string(g.im) + " i";
    } else {
      const bool im_neg = g.im < 0;
      const Rational im_abs = im_neg ? Rational(-g.im) : g.im;
      head = "(" + rat_string(g.re) + (im_neg ? " - " : " + ") +
             (im_abs == 1 ? "i" : rat_string(im_abs) + " i") + ")";
    }
    if (k == 0) return head;
    return head.empty() ? eps_string(k) : head + " " + eps_string(k);
  }
};

}  // namespace gaugekit::sym
