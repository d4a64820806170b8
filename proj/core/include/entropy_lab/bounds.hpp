#pragma once

#include <optional>
#include <string>
#include <vector>

namespace entropy_lab {

/// Upper bound on the maximum L2 risk of the Dirichlet-smoothed plug-in
/// estimator, valid for n >= Sa. bias_bound caps |bias|, var_bound caps the
/// variance, total = bias_bound^2 + var_bound.
struct SmoothedRiskUpper {
  double bias_bound = 0.0;
  double var_bound = 0.0;
  double total = 0.0;
};

SmoothedRiskUpper thm1_upper(int n, int support_size, double a);

/// Lower bounds on the maximum L2 risk of the smoothed plug-in estimator.
/// main_value (with c_term_coefficient = ln^2(S)/n carrying the unknown
/// universal constant c) applies when n >= max(15S, Sa); the small-regime
/// values apply when n < Sa or n < 15S respectively.
struct SmoothedRiskLower {
  std::optional<double> main_value;
  std::optional<double> c_term_coefficient;
  std::optional<double> small_n_value;  // best applicable small-regime bound
};

SmoothedRiskLower thm2_lower(int n, int support_size, double a);

/// Lower bound on the maximum L2 risk of the Bayes estimator. Regime 1:
/// S >= e(2n+1) and n >= Sa. Regime 2: n < Sa. Outside both, regime_error.
double thm3_bayes_lower(int n, int support_size, double a);

/// The a = 0 specialization: maximum-risk bounds for the MLE.
/// lower_main requires n >= 15S and excludes the c ln^2(S)/n term, whose
/// coefficient is reported separately.
struct MleBounds {
  double upper = 0.0;
  std::optional<double> lower_main;
  std::optional<double> c_term_coefficient;
};

MleBounds mle_bounds(int n, int support_size);

/// Variance bound 2n/(n+Sa)^2 * [3 + ln(min((n+Sa)/(a+1), S))]^2 for the
/// smoothed plug-in estimator; valid for every (n, S, a).
double variance_upper(int n, int support_size, double a);

/// Bias-only upper bound ln(1+(S-1)/(n+Sa)) + (2Sa/(n+Sa)) ln((n+Sa)/(2a)),
/// i.e. thm1_upper's bias term exposed on its own; requires n >= Sa.
double appendix_bias_upper(int n, int support_size, double a);

/// Every closed-form bound evaluated at one (n, S, a), with each value
/// present only when its regime precondition holds.
struct BoundProfile {
  int n = 0;
  int support_size = 0;
  double a = 0.0;
  std::optional<double> thm1_bias;
  std::optional<double> thm1_var;
  std::optional<double> thm1_total;
  std::optional<double> thm2_lower_main;
  std::optional<double> thm2_c_term_coefficient;
  std::optional<double> thm2_small_n_value;
  std::optional<double> thm3_lower;
  double mle_upper = 0.0;
  std::optional<double> mle_lower_main;
  double var_upper = 0.0;
  std::optional<double> appendix_bias;
  std::vector<std::string> regime_flags;
};

BoundProfile evaluate_bound_profile(int n, int support_size, double a);

}  // namespace entropy_lab
