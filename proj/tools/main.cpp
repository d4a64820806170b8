// entropy_lab command-line front end: single-shot estimation, risk
// evaluation, bound profiles, and (n, S, a) sweeps emitting CSV/JSON.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "entropy_lab/approx.hpp"
#include "entropy_lab/bounds.hpp"
#include "entropy_lab/distribution.hpp"
#include "entropy_lab/errors.hpp"
#include "entropy_lab/estimators.hpp"
#include "entropy_lab/exact_risk.hpp"
#include "entropy_lab/monte_carlo.hpp"
#include "entropy_lab/report.hpp"

namespace el = entropy_lab;
using nlohmann::json;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitRegime = 3;

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw el::validation_error("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

std::vector<std::int64_t> parse_counts_json(const json& j) {
  if (!j.is_array()) throw el::validation_error("counts file must hold a JSON array");
  std::vector<std::int64_t> counts;
  counts.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer() && !v.is_number_unsigned()) {
      throw el::validation_error("counts must be integers");
    }
    counts.push_back(v.get<std::int64_t>());
  }
  return counts;
}

std::vector<double> parse_probs_json(const json& j) {
  if (!j.is_array()) throw el::validation_error("probability file must hold a JSON array");
  std::vector<double> probs;
  probs.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) throw el::validation_error("probabilities must be numbers");
    probs.push_back(v.get<double>());
  }
  return probs;
}

el::EstimatorKind make_kind(const std::string& name, double a) {
  const el::Kind kind = el::parse_kind(name);
  switch (kind) {
    case el::Kind::kMle: return el::EstimatorKind::mle();
    case el::Kind::kMillerMadow: return el::EstimatorKind::miller_madow();
    case el::Kind::kDirichletPlugin: return el::EstimatorKind::dirichlet_plugin(a);
    case el::Kind::kDirichletBayes: return el::EstimatorKind::dirichlet_bayes(a);
  }
  throw el::validation_error("unknown estimator kind");
}

el::EstimatorKind kind_from_json(const json& j, double default_a) {
  if (!j.is_object() || !j.contains("kind")) {
    throw el::validation_error("estimator entries must be objects with a \"kind\" field");
  }
  const double a = j.contains("a") ? j.at("a").get<double>() : default_a;
  return make_kind(j.at("kind").get<std::string>(), a);
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw el::validation_error("cannot open output file: " + out_path);
  out << text;
}

std::optional<double> try_thm4(int n, int support_size, double a) {
  try {
    return el::thm4_bias_bound(n, support_size, a);
  } catch (const el::regime_error&) {
    return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// estimate

struct EstimateArgs {
  std::string kind = "mle";
  double a = 0.0;
  std::string counts_path;
  bool bits = false;
};

int run_estimate(const EstimateArgs& args) {
  const el::Counts counts(parse_counts_json(load_json_file(args.counts_path)));
  double value = el::estimate(make_kind(args.kind, args.a), counts);
  if (args.bits) value /= std::log(2.0);
  std::cout << el::format_significant(value, 12) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// risk

struct RiskArgs {
  std::string kind = "mle";
  double a = 0.0;
  int n = 0;
  int support_size = 0;
  std::string family = "uniform";
  double heavy_mass = -1.0;
  std::string probs_path;
  std::int64_t trials = 10000;
  std::uint64_t seed = 0;
  std::string method = "auto";
  std::string format = "csv";
  std::string out_path;
};

el::Distribution family_distribution(const std::string& family, int support_size,
                                     double heavy_mass, const std::string& probs_path) {
  if (family == "point_mass") return el::make_point_mass(support_size);
  if (family == "uniform") return el::make_uniform(support_size);
  if (family == "two_level") {
    if (heavy_mass < 0.0) {
      throw el::validation_error("two_level family needs --heavy-mass");
    }
    return el::make_two_level(support_size, heavy_mass);
  }
  if (family == "explicit") {
    if (probs_path.empty()) throw el::validation_error("explicit family needs --probs FILE");
    return el::Distribution(parse_probs_json(load_json_file(probs_path)));
  }
  throw el::validation_error("unknown family: " + family);
}

el::RiskReport risk_by_policy(const el::EstimatorKind& kind, const el::Distribution& p, int n,
                              const std::string& method, std::int64_t trials,
                              const el::SeedSpec& seed) {
  if (method == "force_enum") return el::exact_risk_enumeration(kind, p, n);
  if (method == "force_mc") return el::mc_risk(kind, p, n, trials, seed);
  if (method != "auto") throw el::validation_error("unknown method policy: " + method);
  if (el::enumeration_outcome_count(n, p.support_size()) <= el::kEnumerationOutcomeGuard) {
    return el::exact_risk_enumeration(kind, p, n);
  }
  return el::mc_risk(kind, p, n, trials, seed);
}

json risk_row_to_json(const el::RiskRow& row) {
  return json{{"n", row.n},
              {"S", row.support_size},
              {"a", row.a},
              {"estimator", row.estimator},
              {"family", row.family},
              {"method", el::risk_method_name(row.report.method)},
              {"bias", row.report.bias},
              {"variance", row.report.variance},
              {"mse", row.report.mse},
              {"std_error", row.report.std_error ? json(*row.report.std_error) : json(nullptr)},
              {"seed", row.seed}};
}

int run_risk(const RiskArgs& args) {
  const auto kind = make_kind(args.kind, args.a);
  const auto dist =
      family_distribution(args.family, args.support_size, args.heavy_mass, args.probs_path);
  const auto report = risk_by_policy(kind, dist, args.n, args.method, args.trials,
                                     el::SeedSpec{args.seed});
  el::RiskRow row{args.n, dist.support_size(), args.a, el::kind_name(kind.kind),
                  args.family, report, args.seed};
  std::ostringstream out;
  if (args.format == "json") {
    out << risk_row_to_json(row).dump(2) << "\n";
  } else if (args.format == "csv") {
    out << el::risk_csv_header() << "\n" << el::risk_csv_row(row) << "\n";
  } else {
    throw el::validation_error("unknown format: " + args.format);
  }
  write_output(out.str(), args.out_path);
  return 0;
}

// ---------------------------------------------------------------------------
// bounds

struct BoundsArgs {
  int n = 0;
  int support_size = 0;
  double a = 0.0;
  std::string format = "csv";
  std::string out_path;
};

json profile_to_json(const el::BoundProfile& p, std::optional<double> thm4) {
  const auto opt = [](const std::optional<double>& v) {
    return v ? json(*v) : json(nullptr);
  };
  return json{{"n", p.n},
              {"S", p.support_size},
              {"a", p.a},
              {"thm1_bias", opt(p.thm1_bias)},
              {"thm1_var", opt(p.thm1_var)},
              {"thm1_total", opt(p.thm1_total)},
              {"thm2_lower_main", opt(p.thm2_lower_main)},
              {"thm2_c_term_coefficient", opt(p.thm2_c_term_coefficient)},
              {"thm2_small_n_value", opt(p.thm2_small_n_value)},
              {"thm3_lower", opt(p.thm3_lower)},
              {"mle_upper", p.mle_upper},
              {"mle_lower_main", opt(p.mle_lower_main)},
              {"var_upper", p.var_upper},
              {"appendix_bias_upper", opt(p.appendix_bias)},
              {"thm4_bias_upper", opt(thm4)},
              {"regime_flags", p.regime_flags}};
}

int run_bounds(const BoundsArgs& args) {
  const auto profile = el::evaluate_bound_profile(args.n, args.support_size, args.a);
  const auto thm4 = try_thm4(args.n, args.support_size, args.a);
  std::ostringstream out;
  if (args.format == "json") {
    out << profile_to_json(profile, thm4).dump(2) << "\n";
  } else if (args.format == "csv") {
    out << el::bounds_csv_header() << "\n" << el::bounds_csv_row(profile, thm4) << "\n";
  } else {
    throw el::validation_error("unknown format: " + args.format);
  }
  write_output(out.str(), args.out_path);
  return 0;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepConfig {
  std::vector<int> n_grid;
  std::vector<int> s_grid;
  std::vector<double> a_grid;
  std::vector<json> estimators;
  std::vector<std::string> families;
  std::int64_t trials = 10000;
  std::uint64_t seed = 0;
  std::string method_policy = "auto";
  int budget = el::kBaseWitnessCandidates + 2;
};

SweepConfig parse_sweep_config(const json& j) {
  SweepConfig cfg;
  cfg.n_grid = j.at("n_grid").get<std::vector<int>>();
  cfg.s_grid = j.at("S_grid").get<std::vector<int>>();
  cfg.a_grid = j.at("a_grid").get<std::vector<double>>();
  if (!j.contains("estimators") || !j.at("estimators").is_array()) {
    throw el::validation_error("config needs an \"estimators\" array");
  }
  for (const auto& e : j.at("estimators")) cfg.estimators.push_back(e);
  cfg.families = j.value("families", std::vector<std::string>{"uniform"});
  cfg.trials = j.value("trials", std::int64_t{10000});
  cfg.seed = j.value("seed", std::uint64_t{0});
  cfg.method_policy = j.value("method_policy", std::string("auto"));
  cfg.budget = j.value("budget", el::kBaseWitnessCandidates + 2);
  if (cfg.n_grid.empty() || cfg.s_grid.empty() || cfg.a_grid.empty() ||
      cfg.estimators.empty() || cfg.families.empty()) {
    throw el::validation_error("sweep grids must be non-empty");
  }
  return cfg;
}

int run_sweep(const SweepConfig& cfg, const std::string& out_path) {
  std::ostringstream csv;
  csv << el::sweep_csv_header() << "\n";
  std::uint64_t row_index = 0;
  const el::SeedSpec root{cfg.seed};
  for (int n : cfg.n_grid) {
    for (int s : cfg.s_grid) {
      for (double a : cfg.a_grid) {
        const auto profile = el::evaluate_bound_profile(n, s, a);
        const auto thm4 = try_thm4(n, s, a);
        for (const auto& est_json : cfg.estimators) {
          const auto kind = kind_from_json(est_json, a);
          for (const std::string& family : cfg.families) {
            const el::SeedSpec row_seed = root.substream(row_index++);
            el::RiskRow row;
            row.n = n;
            row.support_size = s;
            row.a = a;
            row.estimator = el::kind_name(kind.kind);
            row.family = family;
            row.seed = cfg.seed;
            if (family == "two_level" || family == "all") {
              el::WitnessFamilies mask;
              mask.point_mass = mask.uniform = (family == "all");
              const double search_a = kind.uses_prior() ? kind.a : a;
              const auto search =
                  el::max_risk_search(kind, n, s, search_a, cfg.budget, cfg.trials, row_seed,
                                      mask);
              row.report = search.worst_report;
              row.family = family == "all" ? search.family : family;
            } else {
              const auto dist = family_distribution(family, s, -1.0, "");
              row.report =
                  risk_by_policy(kind, dist, n, cfg.method_policy, cfg.trials, row_seed);
            }
            csv << el::sweep_csv_row(row, profile, thm4) << "\n";
          }
        }
      }
    }
  }
  write_output(csv.str(), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entropy estimators, exact/Monte-Carlo risk, and closed-form risk bounds"};
  app.require_subcommand(1);

  EstimateArgs est;
  auto* cmd_estimate = app.add_subcommand("estimate", "estimate entropy from a counts file");
  cmd_estimate->add_option("--kind", est.kind,
                           "mle | miller_madow | dirichlet_plugin | dirichlet_bayes");
  cmd_estimate->add_option("--a", est.a, "Dirichlet concentration (Dirichlet kinds)");
  cmd_estimate->add_option("--counts", est.counts_path, "JSON integer array")->required();
  cmd_estimate->add_flag("--bits", est.bits, "print in bits instead of nats");

  RiskArgs risk;
  auto* cmd_risk = app.add_subcommand("risk", "bias/variance/MSE at one distribution");
  cmd_risk->add_option("--kind", risk.kind)->required();
  cmd_risk->add_option("--a", risk.a);
  cmd_risk->add_option("--n", risk.n, "sample size")->required();
  cmd_risk->add_option("--S", risk.support_size, "alphabet size")->required();
  cmd_risk->add_option("--family", risk.family, "point_mass | uniform | two_level | explicit");
  cmd_risk->add_option("--heavy-mass", risk.heavy_mass, "two_level heavy atom");
  cmd_risk->add_option("--probs", risk.probs_path, "JSON array (explicit family)");
  cmd_risk->add_option("--trials", risk.trials);
  cmd_risk->add_option("--seed", risk.seed);
  cmd_risk->add_option("--method", risk.method, "auto | force_mc | force_enum");
  cmd_risk->add_option("--format", risk.format, "csv | json");
  cmd_risk->add_option("--out", risk.out_path);

  BoundsArgs bounds;
  auto* cmd_bounds = app.add_subcommand("bounds", "closed-form bound profile at (n, S, a)");
  cmd_bounds->add_option("--n", bounds.n)->required();
  cmd_bounds->add_option("--S", bounds.support_size)->required();
  cmd_bounds->add_option("--a", bounds.a)->required();
  cmd_bounds->add_option("--format", bounds.format, "csv | json");
  cmd_bounds->add_option("--out", bounds.out_path);

  std::string sweep_config_path;
  std::string sweep_out;
  std::optional<std::uint64_t> sweep_seed;
  std::optional<std::int64_t> sweep_trials;
  std::optional<int> sweep_budget;
  auto* cmd_sweep = app.add_subcommand("sweep", "grid sweep from a JSON config, CSV out");
  cmd_sweep->add_option("--config", sweep_config_path)->required();
  cmd_sweep->add_option("--out", sweep_out);
  cmd_sweep->add_option("--seed", sweep_seed, "override config seed");
  cmd_sweep->add_option("--trials", sweep_trials, "override config trials");
  cmd_sweep->add_option("--budget", sweep_budget, "override witness-search budget");

  try {
    app.parse(argc, argv);
    if (cmd_estimate->parsed()) return run_estimate(est);
    if (cmd_risk->parsed()) return run_risk(risk);
    if (cmd_bounds->parsed()) return run_bounds(bounds);
    if (cmd_sweep->parsed()) {
      auto cfg = parse_sweep_config(load_json_file(sweep_config_path));
      if (sweep_seed) cfg.seed = *sweep_seed;
      if (sweep_trials) cfg.trials = *sweep_trials;
      if (sweep_budget) cfg.budget = *sweep_budget;
      return run_sweep(cfg, sweep_out);
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  } catch (const el::regime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRegime;
  } catch (const el::resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRegime;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
