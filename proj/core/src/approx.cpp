#include "entropy_lab/approx.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "entropy_lab/errors.hpp"
#include "entropy_lab/exact_risk.hpp"
#include "entropy_lab/numeric.hpp"

namespace entropy_lab {

namespace {

double phi(double x) { return std::sqrt(x * (1.0 - x)); }

constexpr double kInvE = 0.36787944117144233;  // 1/e, the entropy kernel's peak

}  // namespace

RealFunction RealFunction::entropy_kernel() {
  return RealFunction([](double t) { return neg_xlogx(t); }, true);
}

RealFunction RealFunction::of(std::function<double(double)> fn) {
  return RealFunction(std::move(fn), false);
}

DiscreteFunctional::DiscreteFunctional(std::vector<double> nodes_in,
                                       std::vector<double> weights_in)
    : nodes(std::move(nodes_in)), weights(std::move(weights_in)) {
  if (nodes.size() != weights.size() || nodes.empty()) {
    throw validation_error("functional needs matching non-empty nodes and weights");
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!(nodes[i] >= 0.0 && nodes[i] <= 1.0)) {
      throw validation_error("functional node outside [0,1]");
    }
    if (!(weights[i] >= 0.0)) throw validation_error("functional weight is negative");
  }
  if (std::abs(pairwise_sum(weights) - 1.0) > 1e-12) {
    throw validation_error("functional weights must sum to 1 (F(e0) = 1)");
  }
}

double apply_functional(const DiscreteFunctional& f_op, const RealFunction& f) {
  std::vector<double> terms(f_op.nodes.size());
  for (std::size_t k = 0; k < terms.size(); ++k) {
    terms[k] = f_op.weights[k] * f(f_op.nodes[k]);
  }
  return pairwise_sum(terms);
}

namespace {

// Binomial weights sum to 1 exactly in real arithmetic; strip the lgamma
// rounding drift so large-n functionals meet the normalization invariant.
void renormalize(std::vector<double>& weights) {
  const double total = pairwise_sum(weights);
  for (double& w : weights) w /= total;
}

}  // namespace

DiscreteFunctional bernstein_functional(int n, double x) {
  if (n < 1) throw validation_error("Bernstein functional needs n >= 1");
  if (!(x >= 0.0 && x <= 1.0)) throw validation_error("x must lie in [0,1]");
  std::vector<double> nodes(static_cast<std::size_t>(n) + 1);
  std::vector<double> weights(nodes.size());
  for (int j = 0; j <= n; ++j) {
    nodes[j] = static_cast<double>(j) / static_cast<double>(n);
    weights[j] = std::exp(log_binomial_pmf(n, x, j));
  }
  renormalize(weights);
  return DiscreteFunctional(std::move(nodes), std::move(weights));
}

DiscreteFunctional dirichlet_functional(int n, int support_size, double a, double p) {
  if (n < 1) throw validation_error("Dirichlet functional needs n >= 1");
  if (support_size < 1) throw validation_error("support size must be >= 1");
  if (!(a >= 0.0)) throw validation_error("Dirichlet concentration a must be >= 0");
  if (!(p >= 0.0 && p <= 1.0)) throw validation_error("p must lie in [0,1]");
  const double denom = static_cast<double>(n) + static_cast<double>(support_size) * a;
  std::vector<double> nodes(static_cast<std::size_t>(n) + 1);
  std::vector<double> weights(nodes.size());
  for (int k = 0; k <= n; ++k) {
    nodes[k] = (static_cast<double>(k) + a) / denom;
    weights[k] = std::exp(log_binomial_pmf(n, p, k));
  }
  renormalize(weights);
  return DiscreteFunctional(std::move(nodes), std::move(weights));
}

FunctionalStats functional_stats(const DiscreteFunctional& f_op, double x) {
  if (!(x > 0.0 && x < 1.0)) {
    throw domain_error("functional_stats needs 0 < x < 1 (phi vanishes at the endpoints)");
  }
  std::vector<double> terms(f_op.nodes.size());
  for (std::size_t k = 0; k < terms.size(); ++k) terms[k] = f_op.weights[k] * f_op.nodes[k];
  const double mean = pairwise_sum(terms);
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const double d = f_op.nodes[k] - mean;
    terms[k] = f_op.weights[k] * d * d;
  }
  const double var = pairwise_sum(terms);

  FunctionalStats stats;
  stats.x = x;
  stats.bias_b = std::abs(mean - x);
  stats.var_v = var;
  const double ph = phi(x);
  stats.h1 = std::sqrt(var + stats.bias_b * stats.bias_b) / ph;
  stats.h2 = std::sqrt(var) / ph;
  return stats;
}

namespace {

// sup of |f(u) - f(x)| over a window by dense grid + one local refinement.
double window_sup_search(const RealFunction& f, double lo, double hi, double x) {
  const double fx = f(x);
  const double resolution = 1e-6;
  const auto scan = [&](double from, double to, double step) {
    double best = 0.0, best_u = from;
    for (double u = from; u <= to + step * 0.5; u += step) {
      const double uu = std::min(u, to);
      const double v = std::abs(f(uu) - fx);
      if (v > best) {
        best = v;
        best_u = uu;
      }
    }
    return std::pair<double, double>(best, best_u);
  };
  auto [best, best_u] = scan(lo, hi, std::max(resolution, (hi - lo) * 1e-7));
  const double step = std::max(resolution, (hi - lo) * 1e-7);
  auto refined = scan(std::max(lo, best_u - step), std::min(hi, best_u + step), step / 100.0);
  return std::max(best, refined.first);
}

// Constrained sup over (midpoint m, half-width d) pairs. dmax(m) is the
// largest admissible half-width at m; value(m, d) the quantity to maximize.
template <typename DMax, typename Value>
double midpoint_halfwidth_search(const DMax& dmax, const Value& value) {
  constexpr int kMidGrid = 2000;   // 1e-3 resolution over (0,1)
  constexpr int kWidthGrid = 64;
  double best = 0.0, best_m = 0.5;
  for (int i = 1; i < kMidGrid; ++i) {
    const double m = static_cast<double>(i) / kMidGrid;
    const double dm = dmax(m);
    if (!(dm > 0.0)) continue;
    for (int j = 1; j <= kWidthGrid; ++j) {
      const double d = dm * static_cast<double>(j) / kWidthGrid;
      const double v = value(m, d);
      if (v > best) {
        best = v;
        best_m = m;
      }
    }
  }
  // One refinement pass around the best midpoint.
  const double span = 1.0 / kMidGrid;
  for (int i = -100; i <= 100; ++i) {
    const double m = best_m + span * static_cast<double>(i) / 100.0;
    if (!(m > 0.0 && m < 1.0)) continue;
    const double dm = dmax(m);
    if (!(dm > 0.0)) continue;
    for (int j = 1; j <= kWidthGrid; ++j) {
      const double d = dm * static_cast<double>(j) / kWidthGrid;
      best = std::max(best, value(m, d));
    }
  }
  return best;
}

}  // namespace

double omega1_pointwise(const RealFunction& f, double h, double x) {
  if (!(h >= 0.0)) throw validation_error("modulus step h must be >= 0");
  if (!(x >= 0.0 && x <= 1.0)) throw validation_error("x must lie in [0,1]");
  if (h == 0.0) return 0.0;
  const double lo = std::max(0.0, x - h);
  const double hi = std::min(1.0, x + h);
  if (f.is_entropy_kernel()) {
    // -t ln t increases on [0, 1/e] and decreases after, so the extreme
    // values over the window sit at the window ends or at the peak.
    const double fx = f(x);
    double sup = std::max(std::abs(f(lo) - fx), std::abs(f(hi) - fx));
    if (lo <= kInvE && kInvE <= hi) sup = std::max(sup, std::abs(f(kInvE) - fx));
    return sup;
  }
  return window_sup_search(f, lo, hi, x);
}

double omega1_dt(const RealFunction& f, double t) {
  if (!(t >= 0.0)) throw validation_error("modulus step must be >= 0");
  if (t == 0.0) return 0.0;
  return midpoint_halfwidth_search(
      [&](double m) { return std::min({t * phi(m) / 2.0, m, 1.0 - m}); },
      [&](double m, double d) { return std::abs(f(m + d) - f(m - d)); });
}

double omega2_dt_search(const RealFunction& f, double h) {
  if (!(h >= 0.0)) throw validation_error("modulus step must be >= 0");
  if (h == 0.0) return 0.0;
  return midpoint_halfwidth_search(
      [&](double m) { return std::min({h * phi(m), m, 1.0 - m}); },
      [&](double m, double d) { return std::abs(f(m + d) - 2.0 * f(m) + f(m - d)); });
}

double omega2_dt(const RealFunction& f, double h) {
  if (!(h >= 0.0)) throw validation_error("modulus step must be >= 0");
  if (f.is_entropy_kernel()) {
    if (h > 1.0) {
      throw domain_error("entropy omega2 closed form is stated for h <= 1 only");
    }
    return h * h * std::log(4.0) / (1.0 + h * h);
  }
  return omega2_dt_search(f, h);
}

double lemma1_bound(const DiscreteFunctional& f_op, const RealFunction& f, double x) {
  const auto stats = functional_stats(f_op, x);
  if (stats.h1 > 0.5) {
    throw regime_error("lemma1_bound requires h1 <= 1/2");
  }
  if (stats.h1 == 0.0) return 0.0;  // F is the point mass at x
  double first = 0.0;
  if (stats.bias_b > 0.0) {
    first = stats.bias_b / (2.0 * stats.h1 * phi(x)) * omega1_dt(f, 2.0 * stats.h1);
  }
  return first + 2.5 * omega2_dt(f, stats.h1);
}

double lemma3_bound(const DiscreteFunctional& f_op, const RealFunction& f, double x) {
  const auto stats = functional_stats(f_op, x);
  if (stats.h2 > 0.5) {
    throw regime_error("lemma3_bound requires h2 <= 1/2");
  }
  return omega1_pointwise(f, stats.bias_b, x) + 2.5 * omega2_dt(f, stats.h2);
}

double thm4_bias_bound(int n, int support_size, double a) {
  if (n < 1) throw validation_error("sample size n must be >= 1");
  if (support_size < 1) throw validation_error("support size must be >= 1");
  if (!(a >= 0.0)) throw validation_error("Dirichlet concentration a must be >= 0");
  const double dn = n, s = support_size;
  if (!(dn >= std::max(s * a, 4.0))) {
    throw regime_error("thm4_bias_bound requires n >= max(Sa, 4)");
  }
  const double denom = dn + s * a;
  double bound = 5.0 * dn * s * std::log(2.0) / (denom * denom);
  if (a > 0.0) bound += 2.0 * s * a / denom * std::log(denom / (2.0 * a));
  return bound;
}

}  // namespace entropy_lab
