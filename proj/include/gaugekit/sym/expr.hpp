#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "gaugekit/sym/coefficient.hpp"

namespace gaugekit::sym {

enum class AtomKind { S, Sinv, B, Psi };

/// One noncommuting symbol with the multiset of coordinate derivatives
/// applied to it. Mixed partials commute, so derivs stays sorted.
struct Atom {
  AtomKind kind = AtomKind::S;
  int index = 0;  // B only: 0..3
  std::vector<int> derivs;

  // S < Sinv < B0..B3 < Psi; groups conjugation sandwiches readably.
  int rank() const {
    switch (kind) {
      case AtomKind::S: return 0;
      case AtomKind::Sinv: return 1;
      case AtomKind::B: return 2 + index;
      case AtomKind::Psi: return 6;
    }
    return 7;
  }

  void add_deriv(int mu) {
    derivs.insert(std::upper_bound(derivs.begin(), derivs.end(), mu), mu);
  }

  friend bool operator==(const Atom& a, const Atom& b) {
    return a.kind == b.kind && a.index == b.index && a.derivs == b.derivs;
  }
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
    if (auto c = a.rank() <=> b.rank(); c != 0) return c;
    return a.derivs <=> b.derivs;
  }

  std::string base_name() const {
    switch (kind) {
      case AtomKind::S: return "S";
      case AtomKind::Sinv: return "Sinv";
      case AtomKind::B: return "B" + std::to_string(index);
      case AtomKind::Psi: return "psi";
    }
    return "?";
  }

  std::string to_string() const {
    std::string s = base_name();
    for (auto it = derivs.rbegin(); it != derivs.rend(); ++it) {
      s = "d" + std::to_string(*it) + "(" + s + ")";
    }
    return s;
  }
};

inline Atom atom_S() { return {AtomKind::S, 0, {}}; }
inline Atom atom_Sinv() { return {AtomKind::Sinv, 0, {}}; }
inline Atom atom_B(int mu) { return {AtomKind::B, mu, {}}; }
inline Atom atom_psi() { return {AtomKind::Psi, 0, {}}; }

/// One position in a monomial word: either an atom or a free derivative
/// operator d<op> acting on everything to its right. Normal forms carry all
/// free operators at the tail of the word.
struct Factor {
  bool is_op = false;
  int op = 0;
  Atom atom;

  static Factor make_op(int mu) { return {true, mu, {}}; }
  static Factor make_atom(Atom a) { return {false, 0, std::move(a)}; }

  friend bool operator==(const Factor& a, const Factor& b) {
    if (a.is_op != b.is_op) return false;
    return a.is_op ? a.op == b.op : a.atom == b.atom;
  }

  std::string to_string() const {
    return is_op ? "d" + std::to_string(op) : atom.to_string();
  }
};

using Word = std::vector<Factor>;

struct Monomial {
  Coefficient coef;
  Word word;
};

/// Canonical total order on words: atom subsequence, then free-operator
/// values in order, then operator positions. For normal-form words (all
/// operators trailing and sorted) this is the documented (atoms,
/// trailing_ops) order.
inline std::strong_ordering compare_words(const Word& a, const Word& b) {
  std::vector<const Atom*> aa, ba;
  std::vector<int> aops, bops, apos, bpos;
  for (std::size_t p = 0; p < a.size(); ++p) {
    if (a[p].is_op) {
      aops.push_back(a[p].op);
      apos.push_back(static_cast<int>(p));
    } else {
      aa.push_back(&a[p].atom);
    }
  }
  for (std::size_t p = 0; p < b.size(); ++p) {
    if (b[p].is_op) {
      bops.push_back(b[p].op);
      bpos.push_back(static_cast<int>(p));
    } else {
      ba.push_back(&b[p].atom);
    }
  }
  const std::size_t na = aa.size(), nb = ba.size();
  for (std::size_t k = 0; k < na && k < nb; ++k) {
    if (auto c = *aa[k] <=> *ba[k]; c != 0) return c;
  }
  if (auto c = na <=> nb; c != 0) return c;
  if (auto c = aops <=> bops; c != 0) return c;
  return apos <=> bpos;
}

struct SymExpr {
  std::vector<Monomial> terms;

  bool is_zero() const { return terms.empty(); }

  friend SymExpr operator+(const SymExpr& a, const SymExpr& b) {
    SymExpr r = a;
    r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
    return r;
  }
  friend SymExpr operator-(const SymExpr& a, const SymExpr& b) {
    SymExpr r = a;
    for (const Monomial& m : b.terms) r.terms.push_back({-m.coef, m.word});
    return r;
  }
  friend SymExpr operator-(const SymExpr& a) {
    SymExpr r;
    r.terms.reserve(a.terms.size());
    for (const Monomial& m : a.terms) r.terms.push_back({-m.coef, m.word});
    return r;
  }
  friend SymExpr operator*(const SymExpr& a, const SymExpr& b) {
    SymExpr r;
    r.terms.reserve(a.terms.size() * b.terms.size());
    for (const Monomial& ma : a.terms) {
      for (const Monomial& mb : b.terms) {
        Monomial m{ma.coef * mb.coef, ma.word};
        m.word.insert(m.word.end(), mb.word.begin(), mb.word.end());
        r.terms.push_back(std::move(m));
      }
    }
    return r;
  }
  friend SymExpr operator*(const Coefficient& c, const SymExpr& a) {
    SymExpr r;
    r.terms.reserve(a.terms.size());
    for (const Monomial& m : a.terms) r.terms.push_back({c * m.coef, m.word});
    return r;
  }
};

inline SymExpr expr_zero() { return {}; }
inline SymExpr expr_scalar(Coefficient c) {
  SymExpr e;
  if (!c.is_zero()) e.terms.push_back({std::move(c), {}});
  return e;
}
inline SymExpr expr_word(Word w, Coefficient c = Coefficient::one()) {
  SymExpr e;
  if (!c.is_zero()) e.terms.push_back({std::move(c), std::move(w)});
  return e;
}
inline SymExpr expr_atom(Atom a) {
  return expr_word({Factor::make_atom(std::move(a))});
}
inline SymExpr expr_op(int mu) { return expr_word({Factor::make_op(mu)}); }

/// Syntactic derivative [d_mu, e]: Leibniz over atom positions; free
/// operators commute with d_mu and scalars are constants. This is what a
/// written d_mu( ... ) means, and the inverse-derivative rewrite reuses it.
inline SymExpr expr_deriv(int mu, const SymExpr& e) {
  SymExpr r;
  for (const Monomial& m : e.terms) {
    for (std::size_t p = 0; p < m.word.size(); ++p) {
      if (m.word[p].is_op) continue;
      Monomial t = m;
      t.word[p].atom.add_deriv(mu);
      r.terms.push_back(std::move(t));
    }
  }
  return r;
}

/// Renders one monomial in the expression grammar.
inline std::string to_string(const Monomial& m) {
  if (m.word.empty()) return m.coef.to_string();
  std::string factors;
  for (std::size_t p = 0; p < m.word.size(); ++p) {
    if (p > 0) factors += " ";
    factors += m.word[p].to_string();
  }
  if (m.coef.is_one()) return factors;
  if (m.coef.is_minus_one()) return "- " + factors;
  return m.coef.to_string() + " " + factors;
}

/// Renders an expression; the result re-parses to an equal expression.
inline std::string to_string(const SymExpr& e) {
  if (e.terms.empty()) return "0";
  std::string out;
  for (std::size_t t = 0; t < e.terms.size(); ++t) {
    const Monomial& m = e.terms[t];
    if (t == 0) {
      out = to_string(m);
      continue;
    }
    if (m.coef.leading_sign() < 0) {
      out += " - " + to_string(Monomial{-m.coef, m.word});
    } else {
      out += " + " + to_string(m);
    }
  }
  return out;
}

}  // namespace gaugekit::sym
