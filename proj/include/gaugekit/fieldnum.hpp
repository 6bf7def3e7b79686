#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "gaugekit/field_spec.hpp"
#include "gaugekit/jet.hpp"
#include "gaugekit/liealg.hpp"

namespace gaugekit {

using Spinor = std::array<Complex, 2>;

namespace detail {

struct ScalarDerivs {
  double f, f1, f2;
};

// cos(sqrt(u)) and sin(sqrt(u))/sqrt(u) are entire in u, which keeps the
// exponential map smooth through alpha = 0. Series branch below u = 1e-8
// (|alpha| < 1e-4), closed forms above.
inline ScalarDerivs cos_sqrt(double u) {
  if (u < 1e-8) {
    return {1.0 - u / 2.0 + u * u / 24.0 - u * u * u / 720.0,
            -0.5 + u / 12.0 - u * u / 240.0,
            1.0 / 12.0 - u / 120.0 + u * u / 3360.0};
  }
  const double r = std::sqrt(u);
  const double sr = std::sin(r), cr = std::cos(r);
  return {cr, -sr / (2.0 * r), (sr - r * cr) / (4.0 * r * r * r)};
}

inline ScalarDerivs sinc_sqrt(double u) {
  if (u < 1e-8) {
    return {1.0 - u / 6.0 + u * u / 120.0 - u * u * u / 5040.0,
            -1.0 / 6.0 + u / 60.0 - u * u / 1680.0,
            1.0 / 60.0 - u / 840.0 + u * u / 30240.0};
  }
  const double r = std::sqrt(u);
  const double sr = std::sin(r), cr = std::cos(r);
  const double r3 = r * r * r;
  return {sr / r, (r * cr - sr) / (2.0 * r3),
          ((6.0 - 2.0 * u) * sr - 6.0 * r * cr) / (8.0 * r3 * u)};
}

/// 2x2 matrix whose entries carry second-order jets.
struct Mat2Jets {
  std::array<Jet2<Complex>, 4> e;

  Mat2 value() const {
    return Mat2(e[0].value, e[1].value, e[2].value, e[3].value);
  }
  Mat2 partial(int mu) const {
    const auto m = static_cast<std::size_t>(mu);
    return Mat2(e[0].grad[m], e[1].grad[m], e[2].grad[m], e[3].grad[m]);
  }
};

/// 2x2 matrix whose entries carry first-order jets; enough to take one more
/// derivative of products such as the transformed potential.
struct Mat2Jet1 {
  std::array<Jet1<Complex>, 4> e;

  static Mat2Jet1 lower(const Mat2Jets& m) {
    Mat2Jet1 r;
    for (int k = 0; k < 4; ++k) r.e[k] = first_order(m.e[k]);
    return r;
  }
  static Mat2Jet1 deriv(const Mat2Jets& m, int mu) {
    Mat2Jet1 r;
    for (int k = 0; k < 4; ++k) r.e[k] = gaugekit::partial(m.e[k], mu);
    return r;
  }

  friend Mat2Jet1 operator*(const Mat2Jet1& a, const Mat2Jet1& b) {
    Mat2Jet1 r;
    r.e[0] = a.e[0] * b.e[0] + a.e[1] * b.e[2];
    r.e[1] = a.e[0] * b.e[1] + a.e[1] * b.e[3];
    r.e[2] = a.e[2] * b.e[0] + a.e[3] * b.e[2];
    r.e[3] = a.e[2] * b.e[1] + a.e[3] * b.e[3];
    return r;
  }
  friend Mat2Jet1 operator+(const Mat2Jet1& a, const Mat2Jet1& b) {
    Mat2Jet1 r;
    for (int k = 0; k < 4; ++k) r.e[k] = a.e[k] + b.e[k];
    return r;
  }
  friend Mat2Jet1 operator-(const Mat2Jet1& a, const Mat2Jet1& b) {
    Mat2Jet1 r;
    for (int k = 0; k < 4; ++k) r.e[k] = a.e[k] - b.e[k];
    return r;
  }
  friend Mat2Jet1 operator*(Complex s, const Mat2Jet1& a) {
    Mat2Jet1 r;
    for (int k = 0; k < 4; ++k) r.e[k] = s * a.e[k];
    return r;
  }

  Mat2 value() const {
    return Mat2(e[0].value, e[1].value, e[2].value, e[3].value);
  }
  Mat2 partial(int mu) const {
    const auto m = static_cast<std::size_t>(mu);
    return Mat2(e[0].grad[m], e[1].grad[m], e[2].grad[m], e[3].grad[m]);
  }
};

inline std::array<Jet2<double>, 3> alpha_jets(const FieldSpec& spec,
                                              const SamplePoint& x) {
  return {spec.alpha[0].jet_at(x), spec.alpha[1].jet_at(x), spec.alpha[2].jet_at(x)};
}

inline std::array<Jet2<double>, 3> b_jets(const FieldSpec& spec, int mu,
                                          const SamplePoint& x) {
  const auto& comp = spec.b[static_cast<std::size_t>(mu)];
  return {comp[0].jet_at(x), comp[1].jet_at(x), comp[2].jet_at(x)};
}

inline std::array<Jet2<Complex>, 2> psi_jets(const FieldSpec& spec,
                                             const SamplePoint& x) {
  return {to_complex(spec.psi[0].jet_at(x)), to_complex(spec.psi[1].jet_at(x))};
}

/// Entries of b.sigma as complex jets.
inline Mat2Jets to_matrix_jets(const std::array<Jet2<double>, 3>& b) {
  const Complex i(0.0, 1.0);
  Mat2Jets m;
  const auto b1 = to_complex(b[0]), b2 = to_complex(b[1]), b3 = to_complex(b[2]);
  m.e[0] = b3;
  m.e[1] = b1 - i * b2;
  m.e[2] = b1 + i * b2;
  m.e[3] = -b3;
  return m;
}

/// Jets of exp(sign * i alpha.sigma), propagated through the closed form
/// cos|alpha| I + i sinc|alpha| (alpha.sigma).
inline Mat2Jets su2_exp_jets(const std::array<Jet2<double>, 3>& a, double sign) {
  const Jet2<double> u = a[0] * a[0] + a[1] * a[1] + a[2] * a[2];
  const ScalarDerivs cd = cos_sqrt(u.value);
  const ScalarDerivs sd = sinc_sqrt(u.value);
  const Jet2<double> c = compose(u, cd.f, cd.f1, cd.f2);
  const Jet2<double> s = compose(u, sd.f, sd.f1, sd.f2);

  const Complex i(0.0, 1.0);
  const auto cc = to_complex(c);
  const auto sa1 = to_complex(s * a[0]), sa2 = to_complex(s * a[1]), sa3 = to_complex(s * a[2]);
  const Complex sg(sign, 0.0);

  Mat2Jets m;
  m.e[0] = cc + (sg * i) * sa3;
  m.e[1] = sg * sa2 + (sg * i) * sa1;
  m.e[2] = -(sg * sa2) + (sg * i) * sa1;
  m.e[3] = cc - (sg * i) * sa3;
  return m;
}

inline Jet1<Complex> matvec_row(const Mat2Jet1& m, const std::array<Jet1<Complex>, 2>& v,
                                int row) {
  return m.e[static_cast<std::size_t>(2 * row)] * v[0] +
         m.e[static_cast<std::size_t>(2 * row + 1)] * v[1];
}

}  // namespace detail

struct BFieldEval {
  Mat2 value;
  std::array<Mat2, 4> partial;  // d_nu B_mu for nu = 0..3
};

/// B_mu(x) = b_mu(x).sigma and its four first partials.
inline BFieldEval eval_B(const FieldSpec& spec, int mu, const SamplePoint& x) {
  const detail::Mat2Jets m = detail::to_matrix_jets(detail::b_jets(spec, mu, x));
  BFieldEval out;
  out.value = m.value();
  for (int nu = 0; nu < 4; ++nu) out.partial[static_cast<std::size_t>(nu)] = m.partial(nu);
  return out;
}

struct SFieldEval {
  GroupElement value;
  std::array<Mat2, 4> partial;  // d_mu S
};

/// S(x) = exp(i alpha(x).sigma) with exact partials from jets.
inline SFieldEval eval_S(const FieldSpec& spec, const SamplePoint& x) {
  const detail::Mat2Jets m = detail::su2_exp_jets(detail::alpha_jets(spec, x), +1.0);
  SFieldEval out{GroupElement(m.value()), {}};
  for (int mu = 0; mu < 4; ++mu) out.partial[static_cast<std::size_t>(mu)] = m.partial(mu);
  return out;
}

/// i eps with the sign of the covariant-derivative convention:
/// D_mu = d_mu + coupling_term(spec) * B_mu.
inline Complex coupling_term(const FieldSpec& spec) {
  const Complex i(0.0, 1.0);
  return spec.sign == SignConvention::Minus ? -i * spec.epsilon : i * spec.epsilon;
}

/// (d_mu -+ i eps B_mu) psi at x.
inline Spinor covariant_deriv_apply(const FieldSpec& spec, int mu,
                                    const SamplePoint& x) {
  const auto psi = detail::psi_jets(spec, x);
  const Mat2 b = eval_B(spec, mu, x).value;
  const Complex s = coupling_term(spec);
  const auto m = static_cast<std::size_t>(mu);
  const Complex p0 = psi[0].value, p1 = psi[1].value;
  return {psi[0].grad[m] + s * (b.m[0] * p0 + b.m[1] * p1),
          psi[1].grad[m] + s * (b.m[2] * p0 + b.m[3] * p1)};
}

/// F_mu_nu = (d_nu B_mu - d_mu B_nu) + i eps (B_mu B_nu - B_nu B_mu).
inline Mat2 field_strength_direct(const FieldSpec& spec, int mu, int nu,
                                  const SamplePoint& x) {
  const BFieldEval bmu = eval_B(spec, mu, x);
  const BFieldEval bnu = eval_B(spec, nu, x);
  const Complex i(0.0, 1.0);
  return (bmu.partial[static_cast<std::size_t>(nu)] -
          bnu.partial[static_cast<std::size_t>(mu)]) +
         (i * spec.epsilon) * mat_commutator(bmu.value, bnu.value);
}

/// The F for which [D_mu, D_nu] = i eps F holds under the field's sign
/// convention; coincides with field_strength_direct for the minus convention,
/// and carries the opposite curl order for the plus convention.
inline Mat2 field_strength_for_convention(const FieldSpec& spec, int mu, int nu,
                                          const SamplePoint& x) {
  const Mat2 f = field_strength_direct(spec, mu, nu, x);
  if (spec.sign == SignConvention::Minus) return f;
  const BFieldEval bmu = eval_B(spec, mu, x);
  const BFieldEval bnu = eval_B(spec, nu, x);
  const Complex i(0.0, 1.0);
  return (bnu.partial[static_cast<std::size_t>(mu)] -
          bmu.partial[static_cast<std::size_t>(nu)]) +
         (i * spec.epsilon) * mat_commutator(bmu.value, bnu.value);
}

/// [D_mu, D_nu] psi at x, assembled from second-order jets of psi; the
/// d_mu d_nu psi contributions cancel through Hessian symmetry. Equals
/// i eps * field_strength_for_convention(...) * psi(x) up to rounding.
inline Spinor field_strength_via_commutator(const FieldSpec& spec, int mu, int nu,
                                            const SamplePoint& x) {
  using detail::Mat2Jet1;
  const auto psi2 = detail::psi_jets(spec, x);
  const std::array<Jet1<Complex>, 2> psi1 = {first_order(psi2[0]), first_order(psi2[1])};
  const Mat2Jet1 bmu = Mat2Jet1::lower(detail::to_matrix_jets(detail::b_jets(spec, mu, x)));
  const Mat2Jet1 bnu = Mat2Jet1::lower(detail::to_matrix_jets(detail::b_jets(spec, nu, x)));
  const Complex s = coupling_term(spec);

  // phi_nu = D_nu psi as a first-order jet, then one more D_mu on top.
  std::array<Jet1<Complex>, 2> phi_nu, phi_mu;
  for (int k = 0; k < 2; ++k) {
    phi_nu[k] = partial(psi2[k], nu) + s * detail::matvec_row(bnu, psi1, k);
    phi_mu[k] = partial(psi2[k], mu) + s * detail::matvec_row(bmu, psi1, k);
  }

  const Mat2 bmu_v = bmu.value(), bnu_v = bnu.value();
  Spinor out;
  for (int k = 0; k < 2; ++k) {
    const Complex d_mu_phi_nu =
        phi_nu[k].grad[static_cast<std::size_t>(mu)] +
        s * (bmu_v.at(k, 0) * phi_nu[0].value + bmu_v.at(k, 1) * phi_nu[1].value);
    const Complex d_nu_phi_mu =
        phi_mu[k].grad[static_cast<std::size_t>(nu)] +
        s * (bnu_v.at(k, 0) * phi_mu[0].value + bnu_v.at(k, 1) * phi_mu[1].value);
    out[static_cast<std::size_t>(k)] = d_mu_phi_nu - d_nu_phi_mu;
  }
  return out;
}

/// Gauge-transformed potential at x:
///   ym:     B' = Sinv B S + i Sinv (d_mu S) / eps
///   author: B' = S B Sinv - i (d_mu S) Sinv / eps
inline Mat2 transform_potential(const FieldSpec& spec, int mu, const SamplePoint& x) {
  const SFieldEval s = eval_S(spec, x);
  const Mat2 sm = s.value.matrix();
  const Mat2 sinv = s.value.inverse().matrix();
  const Mat2 ds = s.partial[static_cast<std::size_t>(mu)];
  const Mat2 b = eval_B(spec, mu, x).value;
  const Complex i_over_eps = Complex(0.0, 1.0) / spec.epsilon;
  if (spec.transform == TransformConvention::Ym) {
    return sinv * b * sm + i_over_eps * (sinv * ds);
  }
  return sm * b * sinv - i_over_eps * (ds * sinv);
}

/// Similarity transform of the field strength: Sinv F S (ym) or S F Sinv
/// (author).
inline Mat2 transform_field_strength(const FieldSpec& spec, const Mat2& f,
                                     const SamplePoint& x) {
  const GroupElement s = eval_S(spec, x).value;
  const Mat2 sm = s.matrix();
  const Mat2 sinv = s.inverse().matrix();
  return spec.transform == TransformConvention::Ym ? sinv * f * sm : sm * f * sinv;
}

namespace detail {

/// Transformed potential with its first partials, via first-order matrix
/// jets. Sinv = exp(-i alpha.sigma), so its jets come from the same closed
/// form with alpha negated.
inline Mat2Jet1 transformed_potential_jets(const FieldSpec& spec, int mu,
                                           const SamplePoint& x) {
  const auto aj = alpha_jets(spec, x);
  const Mat2Jets s2 = su2_exp_jets(aj, +1.0);
  const Mat2Jets sinv2 = su2_exp_jets(aj, -1.0);
  const Mat2Jet1 s1 = Mat2Jet1::lower(s2);
  const Mat2Jet1 sinv1 = Mat2Jet1::lower(sinv2);
  const Mat2Jet1 ds = Mat2Jet1::deriv(s2, mu);
  const Mat2Jet1 b1 = Mat2Jet1::lower(to_matrix_jets(b_jets(spec, mu, x)));
  const Complex i_over_eps = Complex(0.0, 1.0) / spec.epsilon;
  if (spec.transform == TransformConvention::Ym) {
    return sinv1 * b1 * s1 + i_over_eps * (sinv1 * ds);
  }
  return s1 * b1 * sinv1 - i_over_eps * (ds * sinv1);
}

}  // namespace detail

/// Entrywise max norm of F(B') - (transform of F(B)); the machine check of
/// the covariance property. with_commutator = false drops the i eps [B, B]
/// term from both field strengths, which generically breaks covariance.
inline double covariance_residual(const FieldSpec& spec, int mu, int nu,
                                  const SamplePoint& x, bool with_commutator = true) {
  const detail::Mat2Jet1 bp_mu = detail::transformed_potential_jets(spec, mu, x);
  const detail::Mat2Jet1 bp_nu = detail::transformed_potential_jets(spec, nu, x);
  const Complex i(0.0, 1.0);

  Mat2 f_prime = bp_mu.partial(nu) - bp_nu.partial(mu);
  if (with_commutator) {
    f_prime = f_prime + (i * spec.epsilon) * mat_commutator(bp_mu.value(), bp_nu.value());
  }

  const BFieldEval bmu = eval_B(spec, mu, x);
  const BFieldEval bnu = eval_B(spec, nu, x);
  Mat2 f = bmu.partial[static_cast<std::size_t>(nu)] -
           bnu.partial[static_cast<std::size_t>(mu)];
  if (with_commutator) {
    f = f + (i * spec.epsilon) * mat_commutator(bmu.value, bnu.value);
  }

  return (f_prime - transform_field_strength(spec, f, x)).max_abs();
}

/// First-order transformation law b' = b + 2 (b x alpha) + (1/eps) d_mu alpha,
/// evaluated componentwise at x.
inline Vec3 infinitesimal_transform(const FieldSpec& spec, int mu,
                                    const SamplePoint& x) {
  const auto aj = detail::alpha_jets(spec, x);
  const auto bj = detail::b_jets(spec, mu, x);
  const Vec3 a = Vec3::real(aj[0].value, aj[1].value, aj[2].value);
  const Vec3 b = Vec3::real(bj[0].value, bj[1].value, bj[2].value);
  const auto m = static_cast<std::size_t>(mu);
  const Vec3 da = Vec3::real(aj[0].grad[m], aj[1].grad[m], aj[2].grad[m]);
  return b + 2.0 * cross(b, a) + (1.0 / spec.epsilon) * da;
}

/// Residual of the abelian pairing: D'_mu psi' - e^{i q alpha} D_mu psi with
/// D_mu = d_mu + i q A, psi' = e^{i q alpha} psi and A' = A - d_mu alpha.
/// The same A expression stands in for each component of the 4-potential;
/// the cancellation is per component. Returns the max over mu and spinor
/// components.
inline double u1_gauge_check(const CoordExpr& a_pot, const CoordExpr& alpha, double q,
                             const std::array<CoordExpr, 2>& psi, const SamplePoint& x) {
  if (q == 0.0) throw std::invalid_argument("u1_gauge_check: q must be nonzero");
  const Complex i(0.0, 1.0);
  const Jet2<double> aj = a_pot.jet_at(x);
  const Jet2<double> alj = alpha.jet_at(x);
  const std::array<Jet2<Complex>, 2> ps = {to_complex(psi[0].jet_at(x)),
                                           to_complex(psi[1].jet_at(x))};

  // phase jets: e^{i q alpha} = cos(q alpha) + i sin(q alpha)
  const Jet2<double> qa = q * alj;
  const Jet2<Complex> phase = to_complex(cos(qa)) + i * to_complex(sin(qa));

  double worst = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    const auto m = static_cast<std::size_t>(mu);
    const Complex a_prime = aj.value - alj.grad[m];
    for (int k = 0; k < 2; ++k) {
      const auto kk = static_cast<std::size_t>(k);
      const Complex d_psi = ps[kk].grad[m] + i * q * aj.value * ps[kk].value;
      const Jet2<Complex> psi_prime = phase * ps[kk];
      const Complex d_psi_prime = psi_prime.grad[m] + i * q * a_prime * psi_prime.value;
      worst = std::max(worst, std::abs(d_psi_prime - phase.value * d_psi));
    }
  }
  return worst;
}

}  // namespace gaugekit
