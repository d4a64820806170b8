#include "entropy_lab/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "entropy_lab/errors.hpp"
#include "entropy_lab/numeric.hpp"
#include "entropy_lab/parallel.hpp"

namespace entropy_lab {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// Fills `out` with one Multinomial(n; P) draw using conditional binomials:
// X_i ~ Binomial(remaining, p_i / remaining_mass). The last positive-mass
// symbol takes whatever remains, so the counts always sum to n.
void sample_into(const Distribution& p, int n, std::mt19937_64& engine,
                 std::vector<std::int64_t>& out) {
  const int s = p.support_size();
  out.assign(static_cast<std::size_t>(s), 0);
  int last_positive = 0;
  for (int i = 0; i < s; ++i) {
    if (p[i] > 0.0) last_positive = i;
  }
  std::int64_t remaining = n;
  double remaining_mass = 1.0;
  for (int i = 0; i < s && remaining > 0; ++i) {
    const double pi = p[i];
    if (pi <= 0.0) continue;
    if (i == last_positive || remaining_mass <= pi) {
      out[i] = remaining;
      remaining = 0;
      break;
    }
    const double cond = std::clamp(pi / remaining_mass, 0.0, 1.0);
    std::binomial_distribution<std::int64_t> binom(remaining, cond);
    const std::int64_t draw = binom(engine);
    out[i] = draw;
    remaining -= draw;
    remaining_mass -= pi;
  }
}

}  // namespace

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

std::uint64_t SeedSpec::trial_seed(std::uint64_t trial) const {
  return mix64(seed + kGolden * (trial + 1));
}

SeedSpec SeedSpec::substream(std::uint64_t index) const {
  return SeedSpec{mix64(seed ^ mix64(index + kGolden))};
}

Counts sample_counts(const Distribution& p, int n, const SeedSpec& seed, std::uint64_t trial) {
  if (n < 1) throw validation_error("sample size n must be >= 1");
  std::mt19937_64 engine(seed.trial_seed(trial));
  std::vector<std::int64_t> counts;
  sample_into(p, n, engine, counts);
  return Counts(std::move(counts));
}

RiskReport mc_risk(const EstimatorKind& kind, const Distribution& p, int n,
                   std::int64_t trials, const SeedSpec& seed) {
  if (n < 1) throw validation_error("sample size n must be >= 1");
  if (trials < 2) throw validation_error("Monte Carlo needs at least 2 trials");

  const int s = p.support_size();
  const auto terms = detail::build_separable_terms(kind, n, s);
  const double h = entropy(p);

  std::vector<double> estimates(static_cast<std::size_t>(trials));
  parallel_chunks(trials, [&](std::int64_t begin, std::int64_t end) {
    std::vector<std::int64_t> counts;
    for (std::int64_t t = begin; t < end; ++t) {
      std::mt19937_64 engine(seed.trial_seed(static_cast<std::uint64_t>(t)));
      sample_into(p, n, engine, counts);
      double v = terms.constant;
      for (int i = 0; i < s; ++i) v += terms.term[static_cast<std::size_t>(counts[i])];
      estimates[static_cast<std::size_t>(t)] = v;
    }
  });

  const double mean = pairwise_mean(estimates);
  const double t_count = static_cast<double>(trials);

  std::vector<double> scratch(static_cast<std::size_t>(trials));
  for (std::size_t i = 0; i < scratch.size(); ++i) {
    const double d = estimates[i] - mean;
    scratch[i] = d * d;
  }
  const double variance = pairwise_sum(scratch) / (t_count - 1.0);

  for (std::size_t i = 0; i < scratch.size(); ++i) {
    const double e = estimates[i] - h;
    scratch[i] = e * e;
  }
  const double mse = pairwise_mean(scratch);

  for (double& sq : scratch) {
    const double d = sq - mse;
    sq = d * d;
  }
  const double sq_sd = std::sqrt(pairwise_sum(scratch) / (t_count - 1.0));

  RiskReport report;
  report.bias = mean - h;
  report.variance = variance;
  report.mse = mse;
  report.method = RiskMethod::kMonteCarlo;
  report.std_error = sq_sd / std::sqrt(t_count);
  return report;
}

MaxRiskReport max_risk_search(const EstimatorKind& kind, int n, int support_size, double a,
                              int budget, std::int64_t trials, const SeedSpec& seed,
                              const WitnessFamilies& families) {
  if (support_size < 1) throw validation_error("support size must be >= 1");
  const bool two_level_on = families.two_level && support_size >= 2;
  const int base_candidates = (families.point_mass ? 1 : 0) + (families.uniform ? 1 : 0) +
                              (two_level_on ? kTwoLevelGridPoints : 0);
  if (base_candidates == 0) throw validation_error("no witness family selected");
  if (budget < base_candidates) {
    throw validation_error("budget must cover the base witness candidates");
  }

  EstimatorKind search_kind = kind;
  if (search_kind.uses_prior()) search_kind.a = a;

  const double log_lo = std::log(1.0 / static_cast<double>(support_size));
  // log-spaced in (1/S, 1]: from (1/S)^(31/32) up to 1
  const auto grid_heavy = [&](int j) {
    return std::exp(log_lo * (1.0 - static_cast<double>(j + 1) / kTwoLevelGridPoints));
  };

  struct Candidate {
    Distribution dist;
    std::string family;
    std::uint64_t stream;  // substream index, fixed by candidate position
  };
  std::vector<Candidate> candidates;
  if (families.point_mass) candidates.push_back({make_point_mass(support_size), "point_mass", 0});
  if (families.uniform) candidates.push_back({make_uniform(support_size), "uniform", 1});
  if (two_level_on) {
    for (int j = 0; j < kTwoLevelGridPoints; ++j) {
      candidates.push_back({make_two_level(support_size, grid_heavy(j)), "two_level",
                            static_cast<std::uint64_t>(2 + j)});
    }
  }

  int evaluations = 0;
  int best = -1;
  int best_two_level = -1;
  std::vector<RiskReport> reports(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    reports[i] = mc_risk(search_kind, candidates[i].dist, n, trials,
                         seed.substream(candidates[i].stream));
    ++evaluations;
    if (best < 0 || reports[i].mse > reports[best].mse) best = static_cast<int>(i);
    if (candidates[i].family == "two_level" &&
        (best_two_level < 0 || reports[i].mse > reports[best_two_level].mse)) {
      best_two_level = static_cast<int>(i);
    }
  }

  // One halving pass: log-midpoints between the best two-level grid point and
  // its neighbors.
  if (best_two_level >= 0) {
    const int grid_index = static_cast<int>(candidates[best_two_level].stream) - 2;
    const double here = grid_heavy(grid_index);
    const double below = grid_index > 0 ? grid_heavy(grid_index - 1)
                                        : 1.0 / static_cast<double>(support_size);
    std::vector<std::pair<double, std::uint64_t>> refined;
    refined.emplace_back(std::sqrt(here * below), 2 + kTwoLevelGridPoints);
    if (grid_index + 1 < kTwoLevelGridPoints) {
      refined.emplace_back(std::sqrt(here * grid_heavy(grid_index + 1)),
                           3 + kTwoLevelGridPoints);
    }
    for (const auto& [heavy, stream] : refined) {
      if (evaluations >= budget) break;
      if (!(heavy > 1.0 / static_cast<double>(support_size) && heavy < 1.0)) continue;
      candidates.push_back({make_two_level(support_size, heavy), "two_level", stream});
      reports.push_back(mc_risk(search_kind, candidates.back().dist, n, trials,
                                seed.substream(stream)));
      ++evaluations;
      if (reports.back().mse > reports[best].mse) {
        best = static_cast<int>(candidates.size()) - 1;
      }
    }
  }

  MaxRiskReport out{candidates[best].dist, reports[best].mse, candidates[best].family,
                    evaluations, reports[best]};
  return out;
}

}  // namespace entropy_lab
