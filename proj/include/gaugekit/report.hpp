#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gaugekit/version.hpp"

namespace gaugekit {

/// Floating-point values are serialized through this fixed 17-significant-
/// digit formatting (as strings) so that reports are byte-identical across
/// runs and platforms; JSON libraries do not pin shortest-round-trip output.
inline std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

struct CheckRecord {
  std::string name;        // what was computed
  std::string identity;    // stable tag of the law being verified
  std::string convention;  // sign/transform convention, "-" when n/a
  std::uint64_t seed = 0;
  double max_residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::string detail;  // e.g. a failing normal form; empty when unused
};

struct Report {
  std::string command;
  nlohmann::json config = nlohmann::json::object();
  std::vector<CheckRecord> records;

  bool all_pass() const {
    for (const CheckRecord& r : records) {
      if (!r.pass) return false;
    }
    return true;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["tool"] = "gaugekit";
    j["version"] = kVersion;
    j["command"] = command;
    j["config"] = config;
    nlohmann::json recs = nlohmann::json::array();
    for (const CheckRecord& r : records) {
      nlohmann::json e;
      e["name"] = r.name;
      e["identity"] = r.identity;
      e["convention"] = r.convention;
      e["seed"] = r.seed;
      e["max_residual"] = format_real(r.max_residual);
      e["threshold"] = format_real(r.threshold);
      e["pass"] = r.pass;
      if (!r.detail.empty()) e["detail"] = r.detail;
      recs.push_back(std::move(e));
    }
    j["records"] = std::move(recs);
    std::size_t passed = 0;
    for (const CheckRecord& r : records) passed += r.pass ? 1u : 0u;
    j["summary"]["checks"] = records.size();
    j["summary"]["passed"] = passed;
    j["summary"]["failed"] = records.size() - passed;
    j["summary"]["overall_pass"] = all_pass();
    return j;
  }

  std::string to_json_string() const { return to_json().dump(2) + "\n"; }

  std::string to_text() const {
    std::string out = "gaugekit " + std::string(kVersion) + " " + command + "\n";
    for (const CheckRecord& r : records) {
      out += r.pass ? "PASS " : "FAIL ";
      out += r.name + " [" + r.identity + ", " + r.convention + "]";
      out += " max_residual=" + format_real(r.max_residual);
      out += " threshold=" + format_real(r.threshold);
      if (!r.detail.empty()) out += "\n     " + r.detail;
      out += "\n";
    }
    std::size_t passed = 0;
    for (const CheckRecord& r : records) passed += r.pass ? 1u : 0u;
    out += all_pass() ? "OVERALL PASS" : "OVERALL FAIL";
    out += " (" + std::to_string(passed) + "/" + std::to_string(records.size()) + " checks)\n";
    return out;
  }
};

}  // namespace gaugekit
