#pragma once

// Shared oracles and generators for the test suite. Everything here is an
// independent route to a result the library also computes: tests compare the
// two rather than trusting either alone.

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "gaugekit/gaugekit.hpp"

namespace testkit {

using gaugekit::Complex;
using gaugekit::CoordExpr;
using gaugekit::FieldSpec;
using gaugekit::Mat2;
using gaugekit::SamplePoint;
using gaugekit::Spinor;
using gaugekit::SplitMix64;
using gaugekit::Vec3;

/// Truncated power series sum_{k<terms} A^k / k!. Thirty terms put the tail
/// far below double rounding for the |A| <= pi arguments used in tests.
inline Mat2 mat_exp_series(const Mat2& a, int terms = 30) {
  Mat2 sum = Mat2::identity();
  Mat2 power = Mat2::identity();
  double factorial = 1.0;
  for (int k = 1; k < terms; ++k) {
    power = power * a;
    factorial *= static_cast<double>(k);
    sum = sum + (1.0 / factorial) * power;
  }
  return sum;
}

/// Central difference of a matrix-valued function along coordinate mu.
template <typename F>
Mat2 fd_matrix(F&& f, int mu, const SamplePoint& x, double h) {
  SamplePoint xp = x;
  SamplePoint xm = x;
  xp.x[static_cast<std::size_t>(mu)] += h;
  xm.x[static_cast<std::size_t>(mu)] -= h;
  return (1.0 / (2.0 * h)) * (f(xp) - f(xm));
}

inline double spinor_diff(const Spinor& a, const Spinor& b) {
  return std::max(std::abs(a[0] - b[0]), std::abs(a[1] - b[1]));
}

inline CoordExpr cnum(double v) { return CoordExpr::constant(v); }

inline std::array<CoordExpr, 3> const_vec3(double a, double b, double c) {
  return {cnum(a), cnum(b), cnum(c)};
}

inline std::array<CoordExpr, 3> zero_vec3() { return const_vec3(0.0, 0.0, 0.0); }

inline std::array<std::array<CoordExpr, 3>, 4> zero_b() {
  return {zero_vec3(), zero_vec3(), zero_vec3(), zero_vec3()};
}

/// Constant-component FieldSpec; the workhorse for closed-form checks.
inline FieldSpec const_spec(const std::array<double, 3>& alpha,
                            const std::array<std::array<double, 3>, 4>& b,
                            const std::array<double, 2>& psi, double epsilon) {
  std::array<CoordExpr, 3> ae = const_vec3(alpha[0], alpha[1], alpha[2]);
  std::array<std::array<CoordExpr, 3>, 4> be;
  for (int mu = 0; mu < 4; ++mu) {
    const auto& row = b[static_cast<std::size_t>(mu)];
    be[static_cast<std::size_t>(mu)] = const_vec3(row[0], row[1], row[2]);
  }
  return FieldSpec(ae, be, {cnum(psi[0]), cnum(psi[1])}, epsilon);
}

struct SymGenOptions {
  int max_monomials = 4;
  int max_factors = 6;
  // Upper bound on derivative operators plus decorations per monomial. Two
  // keeps every intermediate inside a second-order jet, so generated
  // expressions stay numerically evaluable before and after normalization.
  int deriv_budget = 2;
  bool allow_psi = false;
};

/// Random operator expression drawn inside the stated derivative budget.
/// Rewrites conserve the per-monomial operator-plus-decoration total, so the
/// budget survives normalization.
inline gaugekit::sym::SymExpr random_sym_expr(SplitMix64& rng,
                                              const SymGenOptions& opt) {
  using namespace gaugekit::sym;
  SymExpr e;
  const int n_mono = 1 + static_cast<int>(rng.below(
                             static_cast<std::uint64_t>(opt.max_monomials)));
  for (int t = 0; t < n_mono; ++t) {
    Monomial m;
    long num = static_cast<long>(rng.below(7)) - 3;
    if (num == 0) num = 1;
    m.coef = Coefficient::integer(num);
    if (rng.coin()) m.coef = m.coef * Coefficient::imaginary();
    const int ep = static_cast<int>(rng.below(3)) - 1;
    if (ep != 0) m.coef = m.coef * Coefficient::eps(ep);
    int budget = opt.deriv_budget;
    const int len = static_cast<int>(
        rng.below(static_cast<std::uint64_t>(opt.max_factors + 1)));
    for (int p = 0; p < len; ++p) {
      if (budget > 0 && rng.below(5) == 0) {
        m.word.push_back(Factor::make_op(static_cast<int>(rng.below(4))));
        --budget;
        continue;
      }
      const int pick = static_cast<int>(rng.below(6));
      Atom a = pick == 0   ? atom_S()
               : pick == 1 ? atom_Sinv()
                           : atom_B(pick - 2);
      while (budget > 0 && rng.below(3) == 0) {
        a.add_deriv(static_cast<int>(rng.below(4)));
        --budget;
      }
      m.word.push_back(Factor::make_atom(a));
    }
    if (opt.allow_psi && rng.coin()) {
      Atom a = atom_psi();
      if (budget > 0 && rng.coin()) a.add_deriv(static_cast<int>(rng.below(4)));
      m.word.push_back(Factor::make_atom(a));
    }
    e.terms.push_back(std::move(m));
  }
  return e;
}

}  // namespace testkit
