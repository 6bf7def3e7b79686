#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gaugekit/coord_expr.hpp"
#include "gaugekit/field_spec.hpp"

namespace gaugekit {

/// Schema or syntax problem in a field-configuration file (usage error for
/// the CLI). A zero epsilon is thrown as std::domain_error instead: the file
/// is well-formed, the configuration is meaningless.
class FieldFileError : public std::runtime_error {
 public:
  explicit FieldFileError(const std::string& message)
      : std::runtime_error("field file: " + message) {}
};

struct FieldFile {
  FieldSpec spec;
  std::vector<SamplePoint> points;
};

namespace detail {

inline const nlohmann::json& require_key(const nlohmann::json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw FieldFileError(std::string("missing key '") + key + "'");
  return *it;
}

inline CoordExpr parse_field_expr(const nlohmann::json& j, const std::string& where) {
  if (!j.is_string()) throw FieldFileError("key '" + where + "' must be an expression string");
  try {
    return parse_coord_expr(j.get<std::string>());
  } catch (const CoordParseError& e) {
    throw FieldFileError("key '" + where + "': " + e.what());
  }
}

}  // namespace detail

/// Field-configuration document: alpha (3 expression strings), b (4 arrays
/// of 3 expression strings), psi (2 expression strings), epsilon (number),
/// points (array of 4-number arrays).
inline FieldFile parse_field_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw FieldFileError("top level must be a JSON object");

  const nlohmann::json& ja = detail::require_key(doc, "alpha");
  if (!ja.is_array() || ja.size() != 3) {
    throw FieldFileError("key 'alpha' must be an array of 3 expression strings");
  }
  std::array<CoordExpr, 3> alpha = {
      detail::parse_field_expr(ja[0], "alpha[0]"),
      detail::parse_field_expr(ja[1], "alpha[1]"),
      detail::parse_field_expr(ja[2], "alpha[2]"),
  };

  const nlohmann::json& jb = detail::require_key(doc, "b");
  if (!jb.is_array() || jb.size() != 4) {
    throw FieldFileError("key 'b' must be an array of 4 arrays of 3 expression strings");
  }
  std::array<std::array<CoordExpr, 3>, 4> b;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    if (!jb[mu].is_array() || jb[mu].size() != 3) {
      throw FieldFileError("key 'b[" + std::to_string(mu) +
                           "]' must be an array of 3 expression strings");
    }
    for (std::size_t k = 0; k < 3; ++k) {
      b[mu][k] = detail::parse_field_expr(
          jb[mu][k], "b[" + std::to_string(mu) + "][" + std::to_string(k) + "]");
    }
  }

  const nlohmann::json& jp = detail::require_key(doc, "psi");
  if (!jp.is_array() || jp.size() != 2) {
    throw FieldFileError("key 'psi' must be an array of 2 expression strings");
  }
  std::array<CoordExpr, 2> psi = {detail::parse_field_expr(jp[0], "psi[0]"),
                                  detail::parse_field_expr(jp[1], "psi[1]")};

  const nlohmann::json& je = detail::require_key(doc, "epsilon");
  if (!je.is_number()) throw FieldFileError("key 'epsilon' must be a number");
  const double epsilon = je.get<double>();
  if (epsilon == 0.0) throw std::domain_error("epsilon is zero");

  const nlohmann::json& jpts = detail::require_key(doc, "points");
  if (!jpts.is_array()) throw FieldFileError("key 'points' must be an array of 4-number arrays");
  std::vector<SamplePoint> points;
  points.reserve(jpts.size());
  for (std::size_t n = 0; n < jpts.size(); ++n) {
    const nlohmann::json& row = jpts[n];
    if (!row.is_array() || row.size() != 4) {
      throw FieldFileError("key 'points[" + std::to_string(n) + "]' must have 4 numbers");
    }
    SamplePoint x{};
    for (std::size_t mu = 0; mu < 4; ++mu) {
      if (!row[mu].is_number()) {
        throw FieldFileError("key 'points[" + std::to_string(n) + "]' must have 4 numbers");
      }
      x.x[mu] = row[mu].get<double>();
    }
    points.push_back(x);
  }

  return {FieldSpec(std::move(alpha), std::move(b), std::move(psi), epsilon),
          std::move(points)};
}

inline FieldFile load_field_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FieldFileError("cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw FieldFileError("invalid JSON in '" + path + "': " + e.what());
  }
  return parse_field_json(doc);
}

}  // namespace gaugekit
