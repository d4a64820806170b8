#include "entropy_lab/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "entropy_lab/errors.hpp"

namespace entropy_lab {

namespace {

void check_args(int n, int support_size, double a) {
  if (n < 1) throw validation_error("sample size n must be >= 1");
  if (support_size < 1) throw validation_error("support size must be >= 1");
  if (!(a >= 0.0)) throw validation_error("Dirichlet concentration a must be >= 0");
}

// (2Sa/(n+Sa)) ln((n+Sa)/(2a)), continued by its limit 0 at a = 0.
double prior_mass_bias_term(double n, double s, double a) {
  if (a == 0.0) return 0.0;
  return 2.0 * s * a / (n + s * a) * std::log((n + s * a) / (2.0 * a));
}

// (S-3)a/(4(n+Sa)) ln((n+Sa)/a), continued by its limit 0 at a = 0.
double point_mass_lower_term(double n, double s, double a) {
  if (a == 0.0) return 0.0;
  return (s - 3.0) * a / (4.0 * (n + s * a)) * std::log((n + s * a) / a);
}

}  // namespace

SmoothedRiskUpper thm1_upper(int n, int support_size, double a) {
  check_args(n, support_size, a);
  const double dn = n, s = support_size;
  if (dn < s * a) throw regime_error("thm1_upper requires n >= Sa");
  SmoothedRiskUpper out;
  out.bias_bound = std::log1p((s - 1.0) / (dn + s * a)) + prior_mass_bias_term(dn, s, a);
  out.var_bound = variance_upper(n, support_size, a);
  out.total = out.bias_bound * out.bias_bound + out.var_bound;
  return out;
}

SmoothedRiskLower thm2_lower(int n, int support_size, double a) {
  check_args(n, support_size, a);
  const double dn = n, s = support_size;
  const double log_s = std::log(s);
  SmoothedRiskLower out;
  if (dn >= std::max(15.0 * s, s * a)) {
    const double inner = point_mass_lower_term(dn, s, a) + (s - 1.0) / (8.0 * dn) +
                         s * s / (80.0 * dn * dn) - 1.0 / (48.0 * dn * dn);
    out.main_value = 0.5 * inner * inner;
    out.c_term_coefficient = log_s * log_s / dn;
  }
  double small = 0.0;
  bool have_small = false;
  if (dn < s * a) {
    small = log_s * log_s / 16.0;
    have_small = true;
  }
  if (dn < 15.0 * s) {
    const double inner = point_mass_lower_term(dn, s, a) +
                         std::floor(dn / 15.0) / (8.0 * dn) - 1.0 / (16.0 * dn);
    const double value = inner > 0.0 ? inner * inner : 0.0;
    small = have_small ? std::max(small, value) : value;
    have_small = true;
  }
  if (have_small) out.small_n_value = small;
  return out;
}

double thm3_bayes_lower(int n, int support_size, double a) {
  check_args(n, support_size, a);
  const double dn = n, s = support_size;
  const double e = std::exp(1.0);
  if (s >= e * (2.0 * dn + 1.0) && dn >= s * a) {
    const double v = std::log(s / (e * (2.0 * dn + 1.0)));
    return v * v;
  }
  if (dn < s * a) {
    const double v = std::log((s * a + dn) / (e * (a + dn + 1.0)));
    return v > 0.0 ? v * v : 0.0;
  }
  throw regime_error("thm3_bayes_lower requires S >= e(2n+1) with n >= Sa, or n < Sa");
}

MleBounds mle_bounds(int n, int support_size) {
  check_args(n, support_size, 0.0);
  const double dn = n, s = support_size;
  MleBounds out;
  const double bias = std::log1p((s - 1.0) / dn);
  const double log_n = std::log(dn), log_s = std::log(s);
  out.upper = bias * bias +
              std::min(log_n * log_n / dn, 2.0 * (log_s + 2.0) * (log_s + 2.0) / dn);
  if (dn >= 15.0 * s) {
    const double inner =
        (s - 1.0) / (2.0 * dn) + s * s / (20.0 * dn * dn) - 1.0 / (12.0 * dn * dn);
    out.lower_main = 0.5 * inner * inner;
    out.c_term_coefficient = log_s * log_s / dn;
  }
  return out;
}

double variance_upper(int n, int support_size, double a) {
  check_args(n, support_size, a);
  const double dn = n, s = support_size;
  const double log_arg = std::min((dn + s * a) / (a + 1.0), s);
  const double bracket = 3.0 + std::log(log_arg);
  return 2.0 * dn / ((dn + s * a) * (dn + s * a)) * bracket * bracket;
}

double appendix_bias_upper(int n, int support_size, double a) {
  check_args(n, support_size, a);
  const double dn = n, s = support_size;
  if (dn < s * a) throw regime_error("appendix_bias_upper requires n >= Sa");
  return std::log1p((s - 1.0) / (dn + s * a)) + prior_mass_bias_term(dn, s, a);
}

BoundProfile evaluate_bound_profile(int n, int support_size, double a) {
  check_args(n, support_size, a);
  const double dn = n, s = support_size;
  BoundProfile profile;
  profile.n = n;
  profile.support_size = support_size;
  profile.a = a;

  const bool n_ge_sa = dn >= s * a;
  const bool n_ge_15s = dn >= 15.0 * s;
  if (n_ge_sa) profile.regime_flags.push_back("n>=Sa");
  if (n_ge_15s) profile.regime_flags.push_back("n>=15S");
  if (n_ge_sa && n_ge_15s) profile.regime_flags.push_back("n>=max(15S,Sa)");
  if (s >= std::exp(1.0) * (2.0 * dn + 1.0)) profile.regime_flags.push_back("S>=e(2n+1)");
  if (!n_ge_sa) profile.regime_flags.push_back("n<Sa");
  if (!n_ge_15s) profile.regime_flags.push_back("n<15S");

  if (n_ge_sa) {
    const auto t1 = thm1_upper(n, support_size, a);
    profile.thm1_bias = t1.bias_bound;
    profile.thm1_var = t1.var_bound;
    profile.thm1_total = t1.total;
    profile.appendix_bias = appendix_bias_upper(n, support_size, a);
  }

  const auto t2 = thm2_lower(n, support_size, a);
  profile.thm2_lower_main = t2.main_value;
  profile.thm2_c_term_coefficient = t2.c_term_coefficient;
  profile.thm2_small_n_value = t2.small_n_value;

  try {
    profile.thm3_lower = thm3_bayes_lower(n, support_size, a);
  } catch (const regime_error&) {
    // neither Bayes regime applies; leave empty
  }

  const auto mle = mle_bounds(n, support_size);
  profile.mle_upper = mle.upper;
  profile.mle_lower_main = mle.lower_main;
  profile.var_upper = variance_upper(n, support_size, a);
  return profile;
}

}  // namespace entropy_lab
