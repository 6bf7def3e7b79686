#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "gaugekit/report.hpp"
#include "gaugekit/sym/identities.hpp"
#include "gaugekit/sym/normalize.hpp"
#include "gaugekit/sym/parse.hpp"

namespace gaugekit {

/// Problem with a user-supplied identity file (usage error for the CLI).
class IdentityFileError : public std::runtime_error {
 public:
  explicit IdentityFileError(const std::string& message)
      : std::runtime_error("identity file: " + message) {}
};

namespace detail {

inline std::string pair_suffix(int mu, int nu) {
  return "(" + std::to_string(mu) + "," + std::to_string(nu) + ")";
}

inline sym::SymExpr decorated_atom(sym::Atom a, int mu) {
  a.add_deriv(mu);
  return sym::expr_atom(std::move(a));
}

inline CheckRecord exact_record(std::string name, std::string identity,
                                std::string convention, const sym::SymExpr& residual,
                                bool expect_empty) {
  CheckRecord r;
  r.name = std::move(name);
  r.identity = std::move(identity);
  r.convention = std::move(convention);
  r.seed = 0;
  r.max_residual = static_cast<double>(residual.terms.size());
  r.threshold = 0.0;
  r.pass = expect_empty ? residual.is_zero() : !residual.is_zero();
  if (!residual.is_zero()) {
    r.detail = "normal form has " + std::to_string(residual.terms.size()) +
               " monomials: " + sym::to_string(residual);
  }
  return r;
}

/// Normal form the operator commutator must reduce to, assembled
/// independently of the builder under test: the derivative terms in the
/// order fixed by each sign convention plus the quadratic commutator.
inline sym::SymExpr expected_commutator_reduction(int mu, int nu, SignConvention sign) {
  using namespace sym;
  const SymExpr d_nu_b_mu = decorated_atom(atom_B(mu), nu);
  const SymExpr d_mu_b_nu = decorated_atom(atom_B(nu), mu);
  const SymExpr curl = sign == SignConvention::Minus ? d_nu_b_mu - d_mu_b_nu
                                                     : d_mu_b_nu - d_nu_b_mu;
  const SymExpr comm = expr_atom(atom_B(mu)) * expr_atom(atom_B(nu)) -
                       expr_atom(atom_B(nu)) * expr_atom(atom_B(mu));
  const Coefficient ieps = Coefficient::imaginary() * Coefficient::eps(1);
  const Coefficient eps2 = Coefficient::eps(2);
  return ieps * curl - eps2 * comm;
}

}  // namespace detail

/// The full symbolic corpus: commutator reduction for both sign
/// conventions, the inverse-derivative identity, field-strength covariance
/// for both transform conventions, and the counterterm cancellation.
/// with_commutator = false switches the covariance records to the truncated
/// field strength, which is expected to leave a nonzero residual.
inline Report run_identity_corpus(bool with_commutator = true) {
  using sym::SymExpr;
  Report rep;
  rep.command = "verify-identities";
  rep.config["with_commutator"] = with_commutator;

  for (const SignConvention sign : {SignConvention::Minus, SignConvention::Plus}) {
    for (int mu = 0; mu < 4; ++mu) {
      for (int nu = mu + 1; nu < 4; ++nu) {
        const SymExpr got = sym::commutator_expand(mu, nu, sign);
        const SymExpr residual =
            sym::normalize(got - detail::expected_commutator_reduction(mu, nu, sign));
        rep.records.push_back(detail::exact_record(
            "commutator-reduction" + detail::pair_suffix(mu, nu),
            "covariant-derivative-commutator", to_string(sign), residual, true));
      }
    }
  }

  for (int mu = 0; mu < 4; ++mu) {
    SymExpr sinv_deriv = sym::expr_deriv(mu, sym::expr_atom(sym::atom_Sinv()));
    SymExpr correction = sym::expr_atom(sym::atom_Sinv()) *
                         detail::decorated_atom(sym::atom_S(), mu) *
                         sym::expr_atom(sym::atom_Sinv());
    const SymExpr residual = sym::normalize(sinv_deriv + correction);
    rep.records.push_back(detail::exact_record(
        "inverse-derivative(" + std::to_string(mu) + ")", "inverse-derivative-rule", "-",
        residual, true));
  }

  for (const TransformConvention conv : {TransformConvention::Ym, TransformConvention::Author}) {
    for (int mu = 0; mu < 4; ++mu) {
      for (int nu = mu + 1; nu < 4; ++nu) {
        const SymExpr residual = sym::covariance_residual_sym(mu, nu, with_commutator, conv);
        rep.records.push_back(detail::exact_record(
            std::string(with_commutator ? "covariance-residual" : "covariance-residual-truncated") +
                detail::pair_suffix(mu, nu),
            with_commutator ? "field-strength-covariance" : "truncated-field-strength-control",
            to_string(conv), residual, with_commutator));
      }
    }
  }

  for (const TransformConvention conv : {TransformConvention::Ym, TransformConvention::Author}) {
    for (int mu = 0; mu < 4; ++mu) {
      for (int nu = mu + 1; nu < 4; ++nu) {
        const SymExpr residual = sym::counterterm_check(mu, nu, conv);
        rep.records.push_back(detail::exact_record(
            "counterterm-cancellation" + detail::pair_suffix(mu, nu),
            "counterterm-cancellation", to_string(conv), residual, true));
      }
    }
  }

  return rep;
}

/// File format for user-supplied identities: one `lhs == rhs` per line;
/// blank lines and lines starting with '#' are skipped. Malformed lines
/// throw (usage error), failed identities only mark their record.
inline std::vector<CheckRecord> run_identity_file(std::istream& in) {
  std::vector<CheckRecord> records;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto sep = line.find("==");
    if (sep == std::string::npos) {
      throw IdentityFileError("line " + std::to_string(lineno) + ": expected 'lhs == rhs'");
    }
    sym::SymExpr lhs, rhs;
    try {
      lhs = sym::parse_expr(line.substr(0, sep));
      rhs = sym::parse_expr(line.substr(sep + 2));
    } catch (const sym::SymParseError& e) {
      throw IdentityFileError("line " + std::to_string(lineno) + ": " + e.what());
    }
    const sym::SymExpr residual = sym::normalize(lhs - rhs);
    records.push_back(detail::exact_record("custom-identity(line " + std::to_string(lineno) + ")",
                                           "user-supplied", "-", residual, true));
  }
  return records;
}

}  // namespace gaugekit
