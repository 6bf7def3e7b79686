// Command-line front end: symbolic identity corpus, seeded numerical
// campaigns, field-file transformation, and expression normalization.
// Exit codes: 0 all checks pass, 1 identity or residual failure, 2 usage or
// input error.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gaugekit/campaign.hpp"
#include "gaugekit/conventions.hpp"
#include "gaugekit/field_io.hpp"
#include "gaugekit/fieldnum.hpp"
#include "gaugekit/identity_corpus.hpp"
#include "gaugekit/report.hpp"
#include "gaugekit/sym/normalize.hpp"
#include "gaugekit/sym/parse.hpp"
#include "gaugekit/version.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct OutputOptions {
  std::string out_path;
  std::string format = "json";
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--out", out.out_path, "write the report to this path instead of stdout");
  cmd->add_option("--format", out.format, "report format")
      ->check(CLI::IsMember({"json", "text"}));
}

int emit_report(const gaugekit::Report& rep, const OutputOptions& out) {
  const std::string body = out.format == "text" ? rep.to_text() : rep.to_json_string();
  if (out.out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(out.out_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write '" << out.out_path << "'\n";
      return kExitUsage;
    }
    f << body;
  }
  return rep.all_pass() ? kExitPass : kExitFail;
}

nlohmann::json mat_to_json(const gaugekit::Mat2& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < 2; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < 2; ++c) {
      const gaugekit::Complex v = m.at(r, c);
      row.push_back({gaugekit::format_real(v.real()), gaugekit::format_real(v.imag())});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

int cmd_verify_identities(bool without_commutator, const std::string& identities_path,
                          const OutputOptions& out) {
  gaugekit::Report rep = gaugekit::run_identity_corpus(!without_commutator);
  if (!identities_path.empty()) {
    std::ifstream in(identities_path);
    if (!in) {
      std::cerr << "error: cannot open identity file '" << identities_path << "'\n";
      return kExitUsage;
    }
    for (gaugekit::CheckRecord& r : gaugekit::run_identity_file(in)) {
      rep.records.push_back(std::move(r));
    }
    rep.config["identities"] = identities_path;
  }
  return emit_report(rep, out);
}

int cmd_check_covariance(const gaugekit::RunConfig& cfg, const OutputOptions& out) {
  return emit_report(gaugekit::run_campaign(cfg), out);
}

int cmd_transform(const std::string& field_path, std::optional<double> epsilon,
                  gaugekit::TransformConvention convention, const OutputOptions& out) {
  gaugekit::FieldFile file = gaugekit::load_field_file(field_path);
  gaugekit::FieldSpec spec = file.spec.with_transform(convention);
  if (epsilon) {
    if (*epsilon == 0.0) throw std::domain_error("epsilon is zero");
    spec = gaugekit::FieldSpec(spec.alpha, spec.b, spec.psi, *epsilon, spec.sign, convention);
  }

  nlohmann::json j;
  j["tool"] = "gaugekit";
  j["version"] = gaugekit::kVersion;
  j["command"] = "transform";
  j["config"]["field"] = field_path;
  j["config"]["epsilon"] = gaugekit::format_real(spec.epsilon);
  j["config"]["transform_convention"] = to_string(convention);
  nlohmann::json points = nlohmann::json::array();
  for (const gaugekit::SamplePoint& x : file.points) {
    nlohmann::json entry;
    nlohmann::json coords = nlohmann::json::array();
    for (int mu = 0; mu < 4; ++mu) coords.push_back(gaugekit::format_real(x.x[static_cast<std::size_t>(mu)]));
    entry["x"] = std::move(coords);
    nlohmann::json bprime = nlohmann::json::array();
    for (int mu = 0; mu < 4; ++mu) {
      bprime.push_back(mat_to_json(gaugekit::transform_potential(spec, mu, x)));
    }
    entry["b_prime"] = std::move(bprime);
    nlohmann::json f = nlohmann::json::object();
    nlohmann::json fp = nlohmann::json::object();
    for (int mu = 0; mu < 4; ++mu) {
      for (int nu = mu + 1; nu < 4; ++nu) {
        const std::string key = std::to_string(mu) + std::to_string(nu);
        const gaugekit::Mat2 fmn = gaugekit::field_strength_direct(spec, mu, nu, x);
        f[key] = mat_to_json(fmn);
        fp[key] = mat_to_json(gaugekit::transform_field_strength(spec, fmn, x));
      }
    }
    entry["f"] = std::move(f);
    entry["f_prime"] = std::move(fp);
    points.push_back(std::move(entry));
  }
  j["points"] = std::move(points);

  const std::string body = j.dump(2) + "\n";
  if (out.out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream fobj(out.out_path, std::ios::binary);
    if (!fobj) {
      std::cerr << "error: cannot write '" << out.out_path << "'\n";
      return kExitUsage;
    }
    fobj << body;
  }
  return kExitPass;
}

int cmd_normalize(const std::string& expression) {
  const gaugekit::sym::SymExpr e = gaugekit::sym::parse_expr(expression);
  std::cout << gaugekit::sym::to_string(gaugekit::sym::normalize(e)) << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gaugekit: exact and numerical checks of gauge-field identities"};
  app.set_version_flag("--version", std::string("gaugekit ") + gaugekit::kVersion);
  app.require_subcommand(1);

  // verify-identities
  auto* verify = app.add_subcommand("verify-identities", "run the symbolic identity corpus");
  bool without_commutator = false;
  std::string identities_path;
  OutputOptions verify_out;
  verify->add_flag("--without-commutator", without_commutator,
                   "use the truncated field strength; covariance residuals are expected nonzero");
  verify->add_option("--identities", identities_path,
                     "file of extra identities, one 'lhs == rhs' per line");
  add_output_flags(verify, verify_out);

  // check-covariance
  auto* check = app.add_subcommand("check-covariance", "run the seeded numerical campaign");
  gaugekit::RunConfig cfg;
  OutputOptions check_out;
  std::optional<double> cfg_epsilon;
  std::string sign_name = "minus", convention_name = "ym";
  check->add_option("--seed", cfg.seed, "campaign seed");
  check->add_option("--trials", cfg.trials, "number of random field configurations");
  check->add_option("--points", cfg.points_per_trial, "sample points per trial");
  check->add_option("--tol", cfg.tolerance, "residual tolerance");
  check->add_option("--epsilon", cfg_epsilon, "fix the coupling instead of drawing it");
  check->add_option("--sign", sign_name, "covariant-derivative sign convention")
      ->check(CLI::IsMember({"minus", "plus"}));
  check->add_option("--convention", convention_name, "transform convention")
      ->check(CLI::IsMember({"ym", "author"}));
  add_output_flags(check, check_out);

  // transform
  auto* transform = app.add_subcommand("transform", "apply the gauge transformation to a field file");
  std::string field_path;
  std::optional<double> transform_epsilon;
  std::string transform_convention_name = "ym";
  OutputOptions transform_out;
  transform->add_option("--field", field_path, "field-configuration JSON file")->required();
  transform->add_option("--epsilon", transform_epsilon, "override the file's coupling");
  transform->add_option("--convention", transform_convention_name, "transform convention")
      ->check(CLI::IsMember({"ym", "author"}));
  add_output_flags(transform, transform_out);

  // normalize
  auto* normalize = app.add_subcommand("normalize", "print the canonical form of an expression");
  std::string expression;
  normalize->add_option("expression", expression, "operator expression")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (verify->parsed()) {
      return cmd_verify_identities(without_commutator, identities_path, verify_out);
    }
    if (check->parsed()) {
      cfg.epsilon = cfg_epsilon;
      cfg.sign = gaugekit::sign_convention_from_string(sign_name);
      cfg.transform = gaugekit::transform_convention_from_string(convention_name);
      cfg.validate();
      return cmd_check_covariance(cfg, check_out);
    }
    if (transform->parsed()) {
      return cmd_transform(field_path, transform_epsilon,
                           gaugekit::transform_convention_from_string(transform_convention_name),
                           transform_out);
    }
    if (normalize->parsed()) {
      return cmd_normalize(expression);
    }
  } catch (const std::domain_error& e) {
    // semantic failure (e.g. zero coupling): the run is valid but cannot pass
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const gaugekit::sym::SymParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
