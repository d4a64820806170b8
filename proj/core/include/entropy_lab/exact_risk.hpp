#pragma once

#include <optional>
#include <vector>

#include "entropy_lab/distribution.hpp"
#include "entropy_lab/estimators.hpp"

namespace entropy_lab {

enum class RiskMethod {
  kExactSeparable,
  kExactEnumeration,
  kMonteCarlo,
};

std::string risk_method_name(RiskMethod method);

/// Bias/variance/MSE of one estimator at one (P, n). For the exact methods
/// mse = bias^2 + variance holds up to rounding; std_error is populated by
/// Monte Carlo only.
struct RiskReport {
  double bias = 0.0;
  double variance = 0.0;
  double mse = 0.0;
  RiskMethod method = RiskMethod::kExactEnumeration;
  std::optional<double> std_error;
};

/// ln[ C(n,j) p^j (1-p)^(n-j) ], with the degenerate cases p = 0 and p = 1
/// handled exactly (log-probability 0 for the forced outcome, -inf otherwise).
double log_binomial_pmf(int n, double p, int j);

/// Exact bias E_P[estimate] - H(P) via per-symbol binomial sums, O(nS).
/// All four estimator kinds decompose into a sum of per-count terms plus a
/// constant, so the expectation reduces to S binomial expectations.
double exact_bias_separable(const EstimatorKind& kind, const Distribution& p, int n);

/// Number of multinomial outcomes C(n+S-1, S-1) (as a double; exact until
/// far beyond the feasibility guard).
double enumeration_outcome_count(int n, int support_size);

inline constexpr double kEnumerationOutcomeGuard = 1e7;

/// Exact bias/variance/MSE by enumerating every composition of n into S
/// parts with multinomial log-weights. Throws resource_error when the
/// outcome count exceeds kEnumerationOutcomeGuard.
RiskReport exact_risk_enumeration(const EstimatorKind& kind, const Distribution& p, int n);

namespace detail {

/// Per-count-value decomposition of an estimator: value(X) = constant +
/// sum_i term[X_i]. Exact for all four kinds at fixed (n, S, a).
struct SeparableTerms {
  std::vector<double> term;  // indexed by count value 0..n
  double constant = 0.0;
};

SeparableTerms build_separable_terms(const EstimatorKind& kind, int n, int support_size);

}  // namespace detail

}  // namespace entropy_lab
