#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>

#include "gaugekit/field_spec.hpp"
#include "gaugekit/fieldnum.hpp"
#include "gaugekit/jet.hpp"
#include "gaugekit/liealg.hpp"
#include "gaugekit/sym/expr.hpp"

namespace gaugekit {

namespace detail {

/// Complex jet plus the number of derivative levels still valid. Taking a
/// derivative consumes one level; multiplying keeps the weaker operand's
/// count. Entries above the valid order are never read.
struct OrderedJet {
  int order = 0;
  Jet2<Complex> j;
};

inline OrderedJet oj_mul(const OrderedJet& a, const OrderedJet& b) {
  return {a.order < b.order ? a.order : b.order, a.j * b.j};
}

inline OrderedJet oj_add(const OrderedJet& a, const OrderedJet& b) {
  return {a.order < b.order ? a.order : b.order, a.j + b.j};
}

inline OrderedJet oj_deriv(const OrderedJet& a, int mu) {
  if (a.order < 1) {
    throw std::invalid_argument(
        "symbolic evaluation requires derivatives beyond the supported second order");
  }
  Jet2<Complex> r = Jet2<Complex>::constant(Complex(0.0, 0.0));
  r.value = a.j.grad[static_cast<std::size_t>(mu)];
  for (int k = 0; k < 4; ++k) r.grad[static_cast<std::size_t>(k)] = a.j.hess_at(mu, k);
  return {a.order - 1, r};
}

inline std::array<OrderedJet, 4> sym_atom_matrix(const sym::Atom& atom,
                                                 const FieldSpec& spec,
                                                 const SamplePoint& x) {
  Mat2Jets base;
  switch (atom.kind) {
    case sym::AtomKind::S:
      base = su2_exp_jets(alpha_jets(spec, x), +1.0);
      break;
    case sym::AtomKind::Sinv:
      base = su2_exp_jets(alpha_jets(spec, x), -1.0);
      break;
    case sym::AtomKind::B:
      base = to_matrix_jets(b_jets(spec, atom.index, x));
      break;
    case sym::AtomKind::Psi:
      throw std::invalid_argument("psi is not a matrix factor");
  }
  std::array<OrderedJet, 4> out;
  for (int k = 0; k < 4; ++k) out[static_cast<std::size_t>(k)] = {2, base.e[static_cast<std::size_t>(k)]};
  for (const int d : atom.derivs) {
    for (auto& entry : out) entry = oj_deriv(entry, d);
  }
  return out;
}

inline std::array<OrderedJet, 2> sym_psi_operand(const sym::Atom& atom,
                                                 const FieldSpec& spec,
                                                 const SamplePoint& x) {
  const auto pj = psi_jets(spec, x);
  std::array<OrderedJet, 2> v = {OrderedJet{2, pj[0]}, OrderedJet{2, pj[1]}};
  for (const int d : atom.derivs) {
    v[0] = oj_deriv(v[0], d);
    v[1] = oj_deriv(v[1], d);
  }
  return v;
}

}  // namespace detail

/// Numerically instantiates a symbolic operator expression on the spinor of
/// the field configuration: S and Sinv become exp(+-i alpha.sigma), B_mu
/// becomes b_mu.sigma, derivative decorations and free operators become jet
/// partials, and the whole word acts on psi(x). An explicit psi atom is
/// allowed only as the rightmost factor, where it replaces the implicit
/// operand. Second-order jets bound the derivative depth at two.
inline Spinor eval_sym_on_spinor(const sym::SymExpr& e, const FieldSpec& spec,
                                 const SamplePoint& x) {
  using detail::OrderedJet;
  Spinor total{Complex(0.0, 0.0), Complex(0.0, 0.0)};
  for (const sym::Monomial& m : e.terms) {
    std::size_t end = m.word.size();
    std::array<OrderedJet, 2> v;
    if (end > 0 && !m.word[end - 1].is_op &&
        m.word[end - 1].atom.kind == sym::AtomKind::Psi) {
      v = detail::sym_psi_operand(m.word[end - 1].atom, spec, x);
      --end;
    } else {
      const auto pj = detail::psi_jets(spec, x);
      v = {OrderedJet{2, pj[0]}, OrderedJet{2, pj[1]}};
    }
    for (std::size_t p = 0; p < end; ++p) {
      if (!m.word[p].is_op && m.word[p].atom.kind == sym::AtomKind::Psi) {
        throw std::invalid_argument("psi must be the rightmost factor of a monomial");
      }
    }
    for (std::size_t p = end; p-- > 0;) {
      const sym::Factor& f = m.word[p];
      if (f.is_op) {
        v[0] = detail::oj_deriv(v[0], f.op);
        v[1] = detail::oj_deriv(v[1], f.op);
      } else {
        const auto mat = detail::sym_atom_matrix(f.atom, spec, x);
        const OrderedJet v0 = detail::oj_add(detail::oj_mul(mat[0], v[0]),
                                             detail::oj_mul(mat[1], v[1]));
        const OrderedJet v1 = detail::oj_add(detail::oj_mul(mat[2], v[0]),
                                             detail::oj_mul(mat[3], v[1]));
        v = {v0, v1};
      }
    }
    const Complex c = m.coef.value_at(spec.epsilon);
    total[0] += c * v[0].j.value;
    total[1] += c * v[1].j.value;
  }
  return total;
}

}  // namespace gaugekit
