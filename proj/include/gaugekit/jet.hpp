#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "gaugekit/liealg.hpp"

namespace gaugekit {

/// Value with first partials along the 4 spacetime coordinates.
template <class T>
struct Jet1 {
  T value{};
  std::array<T, 4> grad{};

  static Jet1 constant(T v) {
    Jet1 j;
    j.value = v;
    return j;
  }

  friend Jet1 operator+(const Jet1& a, const Jet1& b) {
    Jet1 r;
    r.value = a.value + b.value;
    for (int k = 0; k < 4; ++k) r.grad[k] = a.grad[k] + b.grad[k];
    return r;
  }
  friend Jet1 operator-(const Jet1& a, const Jet1& b) {
    Jet1 r;
    r.value = a.value - b.value;
    for (int k = 0; k < 4; ++k) r.grad[k] = a.grad[k] - b.grad[k];
    return r;
  }
  friend Jet1 operator-(const Jet1& a) {
    Jet1 r;
    r.value = -a.value;
    for (int k = 0; k < 4; ++k) r.grad[k] = -a.grad[k];
    return r;
  }
  friend Jet1 operator*(const Jet1& a, const Jet1& b) {
    Jet1 r;
    r.value = a.value * b.value;
    for (int k = 0; k < 4; ++k) r.grad[k] = a.grad[k] * b.value + a.value * b.grad[k];
    return r;
  }
  friend Jet1 operator*(T s, const Jet1& a) {
    Jet1 r;
    r.value = s * a.value;
    for (int k = 0; k < 4; ++k) r.grad[k] = s * a.grad[k];
    return r;
  }
};

/// Value with first and second partials; the 10 distinct second partials are
/// stored once, so mixed partials commute by construction.
template <class T>
struct Jet2 {
  T value{};
  std::array<T, 4> grad{};
  std::array<T, 10> hess{};  // upper triangle, row major

  static constexpr int hess_index(int i, int j) {
    // i <= j; row i starts at 4i - i(i-1)/2
    return 4 * i - i * (i - 1) / 2 + (j - i);
  }

  T hess_at(int i, int j) const {
    return i <= j ? hess[static_cast<std::size_t>(hess_index(i, j))]
                  : hess[static_cast<std::size_t>(hess_index(j, i))];
  }

  static Jet2 constant(T v) {
    Jet2 j;
    j.value = v;
    return j;
  }

  /// Seed jet for the coordinate x_axis at value v.
  static Jet2 coordinate(T v, int axis) {
    Jet2 j;
    j.value = v;
    j.grad[static_cast<std::size_t>(axis)] = T(1);
    return j;
  }

  friend Jet2 operator+(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.value = a.value + b.value;
    for (int k = 0; k < 4; ++k) r.grad[k] = a.grad[k] + b.grad[k];
    for (int k = 0; k < 10; ++k) r.hess[k] = a.hess[k] + b.hess[k];
    return r;
  }
  friend Jet2 operator-(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.value = a.value - b.value;
    for (int k = 0; k < 4; ++k) r.grad[k] = a.grad[k] - b.grad[k];
    for (int k = 0; k < 10; ++k) r.hess[k] = a.hess[k] - b.hess[k];
    return r;
  }
  friend Jet2 operator-(const Jet2& a) {
    Jet2 r;
    r.value = -a.value;
    for (int k = 0; k < 4; ++k) r.grad[k] = -a.grad[k];
    for (int k = 0; k < 10; ++k) r.hess[k] = -a.hess[k];
    return r;
  }
  friend Jet2 operator*(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.value = a.value * b.value;
    for (int k = 0; k < 4; ++k) r.grad[k] = a.grad[k] * b.value + a.value * b.grad[k];
    for (int i = 0; i < 4; ++i) {
      for (int j = i; j < 4; ++j) {
        const int k = hess_index(i, j);
        r.hess[k] = a.hess[k] * b.value + a.grad[i] * b.grad[j] +
                    a.grad[j] * b.grad[i] + a.value * b.hess[k];
      }
    }
    return r;
  }
  friend Jet2 operator*(T s, const Jet2& a) {
    Jet2 r;
    r.value = s * a.value;
    for (int k = 0; k < 4; ++k) r.grad[k] = s * a.grad[k];
    for (int k = 0; k < 10; ++k) r.hess[k] = s * a.hess[k];
    return r;
  }
};

/// Chain rule for a scalar function given f, f', f'' at the jet's value.
template <class T>
Jet2<T> compose(const Jet2<T>& a, T f, T f1, T f2) {
  Jet2<T> r;
  r.value = f;
  for (int k = 0; k < 4; ++k) r.grad[k] = f1 * a.grad[k];
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      const int k = Jet2<T>::hess_index(i, j);
      r.hess[k] = f2 * a.grad[i] * a.grad[j] + f1 * a.hess[k];
    }
  }
  return r;
}

inline Jet2<double> sin(const Jet2<double>& a) {
  const double s = std::sin(a.value), c = std::cos(a.value);
  return compose(a, s, c, -s);
}

inline Jet2<double> cos(const Jet2<double>& a) {
  const double s = std::sin(a.value), c = std::cos(a.value);
  return compose(a, c, -s, -c);
}

inline Jet2<double> exp(const Jet2<double>& a) {
  const double e = std::exp(a.value);
  return compose(a, e, e, e);
}

/// Deterministic integer power by repeated multiplication.
inline double ipow(double x, int n) {
  double r = 1.0;
  for (int k = 0; k < n; ++k) r *= x;
  return r;
}

/// x^n for non-negative integer n.
inline Jet2<double> pow(const Jet2<double>& a, int n) {
  if (n == 0) return Jet2<double>::constant(1.0);
  const double f = ipow(a.value, n);
  const double f1 = n * ipow(a.value, n - 1);
  const double f2 = n >= 2 ? static_cast<double>(n) * (n - 1) * ipow(a.value, n - 2) : 0.0;
  return compose(a, f, f1, f2);
}

inline Jet2<Complex> to_complex(const Jet2<double>& a) {
  Jet2<Complex> r;
  r.value = Complex(a.value, 0.0);
  for (int k = 0; k < 4; ++k) r.grad[k] = Complex(a.grad[k], 0.0);
  for (int k = 0; k < 10; ++k) r.hess[k] = Complex(a.hess[k], 0.0);
  return r;
}

/// Truncate to first order.
template <class T>
Jet1<T> first_order(const Jet2<T>& a) {
  Jet1<T> r;
  r.value = a.value;
  r.grad = a.grad;
  return r;
}

/// First-order jet of the mu-partial of a: d_mu a with its own first partials
/// read from the symmetric second partials of a.
template <class T>
Jet1<T> partial(const Jet2<T>& a, int mu) {
  Jet1<T> r;
  r.value = a.grad[static_cast<std::size_t>(mu)];
  for (int k = 0; k < 4; ++k) r.grad[k] = a.hess_at(mu, k);
  return r;
}

}  // namespace gaugekit
