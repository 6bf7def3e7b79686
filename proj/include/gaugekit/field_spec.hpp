#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "gaugekit/conventions.hpp"
#include "gaugekit/coord_expr.hpp"

namespace gaugekit {

/// Declarative description of a field configuration: the rotation angle
/// alpha(x), the potential components b_mu(x), a test spinor psi(x) and the
/// coupling epsilon.
struct FieldSpec {
  std::array<CoordExpr, 3> alpha;                 // components of alpha(x)
  std::array<std::array<CoordExpr, 3>, 4> b;      // b_mu(x), mu = 0..3
  std::array<CoordExpr, 2> psi;                   // test spinor components
  double epsilon = 1.0;                           // nonzero coupling
  SignConvention sign = SignConvention::Minus;
  TransformConvention transform = TransformConvention::Ym;

  FieldSpec() = default;

  FieldSpec(std::array<CoordExpr, 3> alpha_in,
            std::array<std::array<CoordExpr, 3>, 4> b_in,
            std::array<CoordExpr, 2> psi_in, double epsilon_in,
            SignConvention sign_in = SignConvention::Minus,
            TransformConvention transform_in = TransformConvention::Ym)
      : alpha(std::move(alpha_in)),
        b(std::move(b_in)),
        psi(std::move(psi_in)),
        epsilon(epsilon_in),
        sign(sign_in),
        transform(transform_in) {
    if (epsilon == 0.0 || !std::isfinite(epsilon)) {
      throw std::invalid_argument("FieldSpec: epsilon must be finite and nonzero");
    }
  }

  /// Copy with every alpha component multiplied by a constant; used for the
  /// infinitesimal-transformation scaling checks.
  FieldSpec with_alpha_scaled(double s) const {
    FieldSpec out = *this;
    for (auto& a : out.alpha) a = CoordExpr::constant(s) * a;
    return out;
  }

  FieldSpec with_transform(TransformConvention t) const {
    FieldSpec out = *this;
    out.transform = t;
    return out;
  }

  FieldSpec with_sign(SignConvention s) const {
    FieldSpec out = *this;
    out.sign = s;
    return out;
  }
};

}  // namespace gaugekit
