#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gaugekit/coord_expr.hpp"
#include "gaugekit/field_spec.hpp"
#include "gaugekit/rng.hpp"

namespace gaugekit {

/// Random scalar component: a degree <= 2 polynomial plus an optional
/// sin/cos term, all coefficients uniform in [-1, 1]. Smooth and bounded on
/// the sampling box. The draw sequence is part of the reproducibility
/// contract; do not reorder.
inline CoordExpr random_scalar_expr(SplitMix64& rng) {
  CoordExpr e = CoordExpr::constant(rng.uniform(-1.0, 1.0));
  for (int mu = 0; mu < 4; ++mu) {
    if (rng.coin()) {
      e = e + CoordExpr::constant(rng.uniform(-1.0, 1.0)) * CoordExpr::coordinate(mu);
    }
  }
  for (int k = 0; k < 2; ++k) {
    if (rng.coin()) {
      const int a = static_cast<int>(rng.below(4));
      const int b = static_cast<int>(rng.below(4));
      const CoordExpr quad =
          a == b ? CoordExpr::pow(CoordExpr::coordinate(a), 2)
                 : CoordExpr::coordinate(a) * CoordExpr::coordinate(b);
      e = e + CoordExpr::constant(rng.uniform(-1.0, 1.0)) * quad;
    }
  }
  if (rng.coin()) {
    const int axis = static_cast<int>(rng.below(4));
    const CoordExpr arg = CoordExpr::coordinate(axis);
    const CoordExpr trig = rng.coin() ? sin(arg) : cos(arg);
    e = e + CoordExpr::constant(rng.uniform(-1.0, 1.0)) * trig;
  }
  return e;
}

/// Full random configuration: 3 rotation components, 4x3 potential
/// components, 2 spinor components, eps from {0.5, 1, 2}.
inline FieldSpec random_field_spec(std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::array<CoordExpr, 3> alpha = {random_scalar_expr(rng), random_scalar_expr(rng),
                                    random_scalar_expr(rng)};
  std::array<std::array<CoordExpr, 3>, 4> b = {{
      {random_scalar_expr(rng), random_scalar_expr(rng), random_scalar_expr(rng)},
      {random_scalar_expr(rng), random_scalar_expr(rng), random_scalar_expr(rng)},
      {random_scalar_expr(rng), random_scalar_expr(rng), random_scalar_expr(rng)},
      {random_scalar_expr(rng), random_scalar_expr(rng), random_scalar_expr(rng)},
  }};
  std::array<CoordExpr, 2> psi = {random_scalar_expr(rng), random_scalar_expr(rng)};
  const double eps_choices[3] = {0.5, 1.0, 2.0};
  const double eps = eps_choices[rng.below(3)];
  return FieldSpec(std::move(alpha), std::move(b), std::move(psi), eps);
}

inline SamplePoint random_point(SplitMix64& rng) {
  SamplePoint x{};
  for (int mu = 0; mu < 4; ++mu) {
    x.x[static_cast<std::size_t>(mu)] = rng.uniform(-1.0, 1.0);
  }
  return x;
}

inline std::vector<SamplePoint> random_points(SplitMix64& rng, int count) {
  std::vector<SamplePoint> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) pts.push_back(random_point(rng));
  return pts;
}

}  // namespace gaugekit
