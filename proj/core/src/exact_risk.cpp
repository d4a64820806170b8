#include "entropy_lab/exact_risk.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <utility>

#include "entropy_lab/digamma.hpp"
#include "entropy_lab/errors.hpp"
#include "entropy_lab/numeric.hpp"

namespace entropy_lab {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Neumaier-compensated accumulator; keeps long enumeration sums exact to ~1 ulp.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double value) {
    const double t = sum + value;
    if (std::abs(sum) >= std::abs(value)) {
      comp += (sum - t) + value;
    } else {
      comp += (value - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + comp; }
};

double log_choose(int n, int j) {
  return std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(j) + 1.0) -
         std::lgamma(static_cast<double>(n - j) + 1.0);
}

}  // namespace

std::string risk_method_name(RiskMethod method) {
  switch (method) {
    case RiskMethod::kExactSeparable: return "exact_separable";
    case RiskMethod::kExactEnumeration: return "exact_enumeration";
    case RiskMethod::kMonteCarlo: return "monte_carlo";
  }
  throw validation_error("unknown risk method");
}

double log_binomial_pmf(int n, double p, int j) {
  if (n < 1) throw validation_error("binomial requires n >= 1");
  if (j < 0 || j > n) throw validation_error("binomial outcome j out of [0, n]");
  if (!(p >= 0.0 && p <= 1.0)) throw validation_error("binomial p out of [0, 1]");
  if (p == 0.0) return j == 0 ? 0.0 : kNegInf;
  if (p == 1.0) return j == n ? 0.0 : kNegInf;
  double lp = log_choose(n, j);
  if (j > 0) lp += static_cast<double>(j) * std::log(p);
  if (j < n) lp += static_cast<double>(n - j) * std::log1p(-p);
  return lp;
}

namespace detail {

SeparableTerms build_separable_terms(const EstimatorKind& kind, int n, int support_size) {
  if (n < 1) throw validation_error("sample size n must be >= 1");
  SeparableTerms out;
  out.term.resize(static_cast<std::size_t>(n) + 1);
  const double dn = static_cast<double>(n);
  const double s = static_cast<double>(support_size);
  const double a = kind.effective_a();

  switch (kind.kind) {
    case Kind::kMle:
    case Kind::kMillerMadow:
      for (int k = 0; k <= n; ++k) out.term[k] = neg_xlogx(static_cast<double>(k) / dn);
      if (kind.kind == Kind::kMillerMadow) out.constant = (s - 1.0) / (2.0 * dn);
      return out;
    case Kind::kDirichletPlugin: {
      const double denom = dn + s * a;
      for (int k = 0; k <= n; ++k) {
        out.term[k] = neg_xlogx((static_cast<double>(k) + a) / denom);
      }
      return out;
    }
    case Kind::kDirichletBayes: {
      if (a == 0.0) {  // coincides with MLE
        for (int k = 0; k <= n; ++k) out.term[k] = neg_xlogx(static_cast<double>(k) / dn);
        return out;
      }
      const double total_mass = s * a + dn;
      for (int k = 0; k <= n; ++k) {
        const double ak = a + static_cast<double>(k);
        out.term[k] = -ak / total_mass * digamma(ak + 1.0);
      }
      out.constant = digamma(total_mass + 1.0);
      return out;
    }
  }
  throw validation_error("unknown estimator kind");
}

}  // namespace detail

double exact_bias_separable(const EstimatorKind& kind, const Distribution& p, int n) {
  if (n < 1) throw validation_error("sample size n must be >= 1");
  const int s = p.support_size();
  const auto terms = detail::build_separable_terms(kind, n, s);

  CompensatedSum expected;
  expected.add(terms.constant);
  for (int i = 0; i < s; ++i) {
    const double pi = p[i];
    if (pi == 0.0) {
      expected.add(terms.term[0]);  // X_i = 0 almost surely
      continue;
    }
    if (pi == 1.0) {
      expected.add(terms.term[n]);
      continue;
    }
    CompensatedSum symbol;
    for (int j = 0; j <= n; ++j) {
      symbol.add(std::exp(log_binomial_pmf(n, pi, j)) * terms.term[j]);
    }
    expected.add(symbol.value());
  }
  return expected.value() - entropy(p);
}

double enumeration_outcome_count(int n, int support_size) {
  return std::round(std::exp(log_choose(n + support_size - 1, support_size - 1)));
}

namespace {

// Visits every composition of n into S parts in ascending lexicographic
// order, passing the counts and their multinomial log-weight. The log-weight
// prefix (log n! - sum log x_i! + sum x_i log p_i) is extended incrementally
// one coordinate at a time.
void for_each_outcome(const Distribution& p, int n,
                      const std::function<void(const std::vector<std::int64_t>&, double)>& visit) {
  const int s = p.support_size();
  std::vector<double> log_p(s);
  for (int i = 0; i < s; ++i) log_p[i] = p[i] > 0.0 ? std::log(p[i]) : kNegInf;
  std::vector<double> log_factorial(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) log_factorial[k] = std::lgamma(static_cast<double>(k) + 1.0);

  std::vector<std::int64_t> counts(s, 0);
  const std::function<void(int, int, double)> rec = [&](int i, int remaining, double log_w) {
    if (i == s - 1) {
      if (p[i] == 0.0 && remaining > 0) return;
      counts[i] = remaining;
      double lw = log_w - log_factorial[remaining];
      if (remaining > 0) lw += static_cast<double>(remaining) * log_p[i];
      visit(counts, lw);
      return;
    }
    const int limit = p[i] > 0.0 ? remaining : 0;
    for (int k = 0; k <= limit; ++k) {
      counts[i] = k;
      double lw = log_w - log_factorial[k];
      if (k > 0) lw += static_cast<double>(k) * log_p[i];
      rec(i + 1, remaining - k, lw);
    }
    counts[i] = 0;
  };
  rec(0, n, log_factorial[n]);
}

}  // namespace

RiskReport exact_risk_enumeration(const EstimatorKind& kind, const Distribution& p, int n) {
  if (n < 1) throw validation_error("sample size n must be >= 1");
  const double outcomes = enumeration_outcome_count(n, p.support_size());
  if (outcomes > kEnumerationOutcomeGuard) {
    throw resource_error("enumeration would visit " + std::to_string(outcomes) +
                         " outcomes (guard " + std::to_string(kEnumerationOutcomeGuard) +
                         "); use Monte Carlo (mc_risk) instead");
  }

  const double h = entropy(p);

  // First pass: E[estimate]. Second pass: central moments about that mean,
  // plus E[(estimate - H)^2], so the decomposition identity is testable
  // rather than baked in.
  CompensatedSum mean_acc;
  for_each_outcome(p, n, [&](const std::vector<std::int64_t>& counts, double log_w) {
    mean_acc.add(std::exp(log_w) * estimate(kind, Counts(counts)));
  });
  const double mean = mean_acc.value();

  CompensatedSum var_acc;
  CompensatedSum mse_acc;
  for_each_outcome(p, n, [&](const std::vector<std::int64_t>& counts, double log_w) {
    const double w = std::exp(log_w);
    const double v = estimate(kind, Counts(counts));
    var_acc.add(w * (v - mean) * (v - mean));
    mse_acc.add(w * (v - h) * (v - h));
  });

  RiskReport report;
  report.bias = mean - h;
  report.variance = var_acc.value();
  report.mse = mse_acc.value();
  report.method = RiskMethod::kExactEnumeration;
  return report;
}

}  // namespace entropy_lab
