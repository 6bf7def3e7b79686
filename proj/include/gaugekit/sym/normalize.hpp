#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <tuple>
#include <vector>

#include "gaugekit/sym/expr.hpp"

namespace gaugekit::sym {

namespace detail {

// Lexicographic termination measure. The rules are tried in a fixed
// priority (operator Leibniz, then inverse derivative, then pair deletion),
// so when the inverse-derivative rule fires every free operator is already
// trailing and the inserted atoms cannot raise the first component.
struct Measure {
  long op_span = 0;        // sum over free operators of atoms to their right
  long sinv_derivs = 0;    // total derivative indices on Sinv atoms
  long atoms = 0;
  long op_inversions = 0;  // out-of-order pairs in the free-operator sequence

  friend auto operator<=>(const Measure&, const Measure&) = default;
};

inline Measure measure_word(const Word& w) {
  Measure m;
  long atoms_right = 0;
  std::vector<int> ops;
  for (std::size_t p = w.size(); p-- > 0;) {
    const Factor& f = w[p];
    if (f.is_op) {
      m.op_span += atoms_right;
      ops.push_back(f.op);  // reversed order; inversions counted below
    } else {
      ++atoms_right;
      ++m.atoms;
      if (f.atom.kind == AtomKind::Sinv) m.sinv_derivs += static_cast<long>(f.atom.derivs.size());
    }
  }
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      if (ops[j] > ops[i]) ++m.op_inversions;  // reversed scan flips the test
    }
  }
  return m;
}

enum class RuleKind { None, OperatorLeibniz, InverseDeriv, PairDelete, OpSort };

struct Redex {
  RuleKind rule = RuleKind::None;
  std::size_t pos = 0;
};

inline bool inverse_pair(const Factor& a, const Factor& b) {
  if (a.is_op || b.is_op) return false;
  if (!a.atom.derivs.empty() || !b.atom.derivs.empty()) return false;
  return (a.atom.kind == AtomKind::S && b.atom.kind == AtomKind::Sinv) ||
         (a.atom.kind == AtomKind::Sinv && b.atom.kind == AtomKind::S);
}

inline Redex find_redex(const Word& w) {
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    if (w[p].is_op && !w[p + 1].is_op) return {RuleKind::OperatorLeibniz, p};
  }
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (!w[p].is_op && w[p].atom.kind == AtomKind::Sinv && !w[p].atom.derivs.empty()) {
      return {RuleKind::InverseDeriv, p};
    }
  }
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    if (inverse_pair(w[p], w[p + 1])) return {RuleKind::PairDelete, p};
  }
  // Free operators commute; sort adjacent out-of-order pairs so the
  // trailing run behaves as a multiset.
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    if (w[p].is_op && w[p + 1].is_op && w[p].op > w[p + 1].op) {
      return {RuleKind::OpSort, p};
    }
  }
  return {};
}

// d_mu past atom A: (d_mu A) rest + A d_mu rest. The spinor symbol is an
// operand rather than a multiplication operator, so a derivative meeting it
// applies terminally: no pass-through term is emitted for psi.
inline void rewrite_operator_leibniz(const Monomial& m, std::size_t p,
                                     std::vector<Monomial>& out) {
  const int mu = m.word[p].op;
  Monomial a{m.coef, m.word};
  a.word.erase(a.word.begin() + static_cast<std::ptrdiff_t>(p));
  a.word[p].atom.add_deriv(mu);
  out.push_back(std::move(a));

  if (m.word[p + 1].atom.kind == AtomKind::Psi) return;

  Monomial b{m.coef, m.word};
  std::swap(b.word[p], b.word[p + 1]);
  out.push_back(std::move(b));
}

// Derivative of the inverse: for the smallest decoration nu,
//   d_D Sinv = d_{D minus nu} ( - Sinv (d_nu S) Sinv )
// with the outer derivatives distributed over the three-factor product.
inline void rewrite_inverse_deriv(const Monomial& m, std::size_t p,
                                  std::vector<Monomial>& out) {
  const std::vector<int> derivs = m.word[p].atom.derivs;
  const int nu = derivs.front();

  Atom s_nu = atom_S();
  s_nu.add_deriv(nu);
  std::vector<Word> fragments = {
      {Factor::make_atom(atom_Sinv()), Factor::make_atom(s_nu), Factor::make_atom(atom_Sinv())}};
  for (std::size_t k = 1; k < derivs.size(); ++k) {
    std::vector<Word> next;
    for (const Word& frag : fragments) {
      for (std::size_t q = 0; q < frag.size(); ++q) {
        Word t = frag;
        t[q].atom.add_deriv(derivs[k]);
        next.push_back(std::move(t));
      }
    }
    fragments = std::move(next);
  }

  for (const Word& frag : fragments) {
    Monomial t{-m.coef, {}};
    t.word.reserve(m.word.size() + frag.size() - 1);
    t.word.insert(t.word.end(), m.word.begin(), m.word.begin() + static_cast<std::ptrdiff_t>(p));
    t.word.insert(t.word.end(), frag.begin(), frag.end());
    t.word.insert(t.word.end(), m.word.begin() + static_cast<std::ptrdiff_t>(p) + 1, m.word.end());
    out.push_back(std::move(t));
  }
}

inline void rewrite_pair_delete(const Monomial& m, std::size_t p, std::vector<Monomial>& out) {
  Monomial t{m.coef, m.word};
  t.word.erase(t.word.begin() + static_cast<std::ptrdiff_t>(p),
               t.word.begin() + static_cast<std::ptrdiff_t>(p) + 2);
  out.push_back(std::move(t));
}

}  // namespace detail

/// Rewrites to the canonical normal form: free derivative operators pushed
/// to the word tail by the Leibniz rule, derivatives stripped off Sinv via
/// the inverse rule, deriv-free S Sinv / Sinv S pairs deleted, like
/// monomials merged, result sorted. Empty expression encodes zero.
inline SymExpr normalize(const SymExpr& e) {
  std::vector<Monomial> work;
  work.reserve(e.terms.size());
  for (const Monomial& m : e.terms) {
    if (!m.coef.is_zero()) work.push_back(m);
  }

  std::vector<Monomial> done;
  std::vector<Monomial> out;
  while (!work.empty()) {
    Monomial m = std::move(work.back());
    work.pop_back();
    const detail::Redex r = detail::find_redex(m.word);
    if (r.rule == detail::RuleKind::None) {
      done.push_back(std::move(m));
      continue;
    }
    out.clear();
    switch (r.rule) {
      case detail::RuleKind::OperatorLeibniz:
        detail::rewrite_operator_leibniz(m, r.pos, out);
        break;
      case detail::RuleKind::InverseDeriv:
        detail::rewrite_inverse_deriv(m, r.pos, out);
        break;
      case detail::RuleKind::PairDelete:
        detail::rewrite_pair_delete(m, r.pos, out);
        break;
      case detail::RuleKind::OpSort: {
        Monomial t{m.coef, m.word};
        std::swap(t.word[r.pos], t.word[r.pos + 1]);
        out.push_back(std::move(t));
        break;
      }
      case detail::RuleKind::None:
        break;
    }
#ifndef NDEBUG
    const detail::Measure before = detail::measure_word(m.word);
    for (const Monomial& t : out) {
      assert(detail::measure_word(t.word) < before && "rewrite must shrink the measure");
    }
#endif
    for (Monomial& t : out) work.push_back(std::move(t));
  }

  std::sort(done.begin(), done.end(), [](const Monomial& a, const Monomial& b) {
    return compare_words(a.word, b.word) < 0;
  });

  SymExpr result;
  for (Monomial& m : done) {
    if (!result.terms.empty() && result.terms.back().word == m.word) {
      result.terms.back().coef = result.terms.back().coef + m.coef;
      if (result.terms.back().coef.is_zero()) result.terms.pop_back();
    } else {
      result.terms.push_back(std::move(m));
    }
  }
  return result;
}

/// Decision procedure: equal iff the normal form of the difference is empty.
inline bool expr_equal(const SymExpr& a, const SymExpr& b) {
  return normalize(a - b).is_zero();
}

}  // namespace gaugekit::sym
