#pragma once

#include <cstdint>
#include <string>

#include "entropy_lab/distribution.hpp"
#include "entropy_lab/estimators.hpp"
#include "entropy_lab/exact_risk.hpp"

namespace entropy_lab {

/// splitmix64 finalizer: the fixed avalanche permutation behind every seed
/// derivation here.
std::uint64_t mix64(std::uint64_t x);

/// Root seed for a reproducible experiment. Per-trial generator seeds are
/// derived counter-style -- trial_seed = mix64(seed + GOLDEN * (trial + 1)),
/// GOLDEN = 0x9e3779b97f4a7c15 -- so a trial's sample depends only on
/// (seed, trial_index), never on how trials are split across workers.
struct SeedSpec {
  std::uint64_t seed = 0;

  std::uint64_t trial_seed(std::uint64_t trial) const;

  /// An independent stream for sub-experiment `index` (one per search
  /// candidate, one per sweep row, ...).
  SeedSpec substream(std::uint64_t index) const;
};

/// One Multinomial(n; P) draw, sampled symbol by symbol as conditional
/// binomials. Deterministic in (seed, trial).
Counts sample_counts(const Distribution& p, int n, const SeedSpec& seed, std::uint64_t trial);

/// Monte Carlo risk estimate over `trials` independent samples.
/// bias = mean(estimate) - H(P); variance = sample variance of estimates;
/// mse = mean squared error; std_error = sd(squared errors)/sqrt(trials).
/// Trials may run on several threads; per-trial values are reduced pairwise
/// in trial order, so the report is bit-identical for any worker count.
RiskReport mc_risk(const EstimatorKind& kind, const Distribution& p, int n,
                   std::int64_t trials, const SeedSpec& seed);

/// Number of distributions max_risk_search always evaluates before the
/// refinement pass: point mass, uniform, and a 32-point two-level grid.
inline constexpr int kBaseWitnessCandidates = 34;
inline constexpr int kTwoLevelGridPoints = 32;

struct MaxRiskReport {
  Distribution worst_distribution;
  double worst_risk = 0.0;       // MSE at the maximizer
  std::string family;            // "point_mass" | "uniform" | "two_level"
  int evaluations = 0;
  RiskReport worst_report;       // full report at the maximizer
};

/// Which witness families a search may draw candidates from.
struct WitnessFamilies {
  bool point_mass = true;
  bool uniform = true;
  bool two_level = true;
};

/// Maximum-risk search over the witness families the lower-bound proofs use:
/// point mass, uniform, and two-level distributions with the heavy mass on a
/// logarithmic grid, refined once around the best grid point. Each candidate
/// is scored with mc_risk(trials) on its own substream; substream indices are
/// fixed by candidate position, so restricting `families` never changes the
/// scores of the candidates that remain. For the Dirichlet kinds the grid
/// concentration `a` overrides kind.a. budget caps the number of candidate
/// evaluations and must cover the selected base candidates.
MaxRiskReport max_risk_search(const EstimatorKind& kind, int n, int support_size, double a,
                              int budget, std::int64_t trials, const SeedSpec& seed,
                              const WitnessFamilies& families = {});

}  // namespace entropy_lab
