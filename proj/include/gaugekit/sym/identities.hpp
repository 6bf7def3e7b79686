#pragma once

#include <array>

#include "gaugekit/conventions.hpp"
#include "gaugekit/sym/expr.hpp"
#include "gaugekit/sym/normalize.hpp"

namespace gaugekit::sym {

namespace detail {

inline SymExpr i_over_eps() {
  return expr_scalar(Coefficient::imaginary() * Coefficient::eps(-1));
}
inline SymExpr i_eps() {
  return expr_scalar(Coefficient::imaginary() * Coefficient::eps(1));
}
inline SymExpr deriv_atom(Atom a, int mu) {
  a.add_deriv(mu);
  return expr_atom(a);
}

}  // namespace detail

/// Gauge-transformed potential, unnormalized:
///   ym:     Sinv B_mu S + (i/eps) Sinv (d_mu S)
///   author: S B_mu Sinv - (i/eps) (d_mu S) Sinv
inline SymExpr build_transformed_potential(int mu, TransformConvention convention) {
  const SymExpr S = expr_atom(atom_S());
  const SymExpr Sinv = expr_atom(atom_Sinv());
  const SymExpr B = expr_atom(atom_B(mu));
  const SymExpr dS = detail::deriv_atom(atom_S(), mu);
  if (convention == TransformConvention::Ym) {
    return Sinv * B * S + detail::i_over_eps() * Sinv * dS;
  }
  return S * B * Sinv - detail::i_over_eps() * dS * Sinv;
}

/// (d_nu P_mu - d_mu P_nu) + i eps (P_mu P_nu - P_nu P_mu), normalized;
/// without the commutator this is the electromagnetic-like truncation.
inline SymExpr field_strength_sym(int mu, int nu, bool with_commutator,
                                  const std::array<SymExpr, 4>& potentials) {
  const SymExpr& pm = potentials[static_cast<std::size_t>(mu)];
  const SymExpr& pn = potentials[static_cast<std::size_t>(nu)];
  SymExpr e = expr_deriv(nu, pm) - expr_deriv(mu, pn);
  if (with_commutator) {
    e = e + detail::i_eps() * (pm * pn - pn * pm);
  }
  return normalize(e);
}

inline std::array<SymExpr, 4> bare_potentials() {
  return {expr_atom(atom_B(0)), expr_atom(atom_B(1)), expr_atom(atom_B(2)),
          expr_atom(atom_B(3))};
}

inline std::array<SymExpr, 4> transformed_potentials(TransformConvention convention) {
  return {build_transformed_potential(0, convention), build_transformed_potential(1, convention),
          build_transformed_potential(2, convention), build_transformed_potential(3, convention)};
}

/// Similarity transform of the field strength: Sinv f S (ym), S f Sinv
/// (author).
inline SymExpr conjugate_field_strength(const SymExpr& f, TransformConvention convention) {
  const SymExpr S = expr_atom(atom_S());
  const SymExpr Sinv = expr_atom(atom_Sinv());
  return convention == TransformConvention::Ym ? Sinv * f * S : S * f * Sinv;
}

/// normalize( F(B') - conjugate(F(B)) ). Empty with the full field strength;
/// with the commutator omitted it is the extraneous-terms residual.
inline SymExpr covariance_residual_sym(int mu, int nu, bool with_commutator,
                                       TransformConvention convention) {
  const SymExpr f_prime =
      field_strength_sym(mu, nu, with_commutator, transformed_potentials(convention));
  const SymExpr f = field_strength_sym(mu, nu, with_commutator, bare_potentials());
  return normalize(f_prime - conjugate_field_strength(f, convention));
}

/// The counterterm cancellation: adding i eps [B'_mu, B'_nu] to the
/// truncated transformed field strength must supply exactly the conjugated
/// commutator plus the negative of the extraneous terms. Empty iff the
/// cancellation is exact.
inline SymExpr counterterm_check(int mu, int nu, TransformConvention convention) {
  const SymExpr bp_mu = build_transformed_potential(mu, convention);
  const SymExpr bp_nu = build_transformed_potential(nu, convention);
  const SymExpr b_mu = expr_atom(atom_B(mu));
  const SymExpr b_nu = expr_atom(atom_B(nu));
  const SymExpr counter = detail::i_eps() * (bp_mu * bp_nu - bp_nu * bp_mu);
  const SymExpr conjugated =
      conjugate_field_strength(detail::i_eps() * (b_mu * b_nu - b_nu * b_mu), convention);
  const SymExpr residual = covariance_residual_sym(mu, nu, false, convention);
  return normalize(counter - conjugated + residual);
}

/// Normal form of [d_mu + s B_mu, d_nu + s B_nu] with s = -i eps (minus
/// convention) or +i eps. All monomials with surviving free operators
/// cancel.
inline SymExpr commutator_expand(int mu, int nu, SignConvention sign) {
  const SymExpr s = sign == SignConvention::Minus ? -detail::i_eps() : detail::i_eps();
  const SymExpr d_mu = expr_op(mu) + s * expr_atom(atom_B(mu));
  const SymExpr d_nu = expr_op(nu) + s * expr_atom(atom_B(nu));
  return normalize(d_mu * d_nu - d_nu * d_mu);
}

}  // namespace gaugekit::sym
