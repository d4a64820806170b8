#include "entropy_lab/estimators.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "entropy_lab/digamma.hpp"
#include "entropy_lab/errors.hpp"
#include "entropy_lab/numeric.hpp"

namespace entropy_lab {

EstimatorKind EstimatorKind::dirichlet_plugin(double a) {
  if (!(a >= 0.0)) throw validation_error("Dirichlet concentration a must be >= 0");
  return {Kind::kDirichletPlugin, a};
}

EstimatorKind EstimatorKind::dirichlet_bayes(double a) {
  if (!(a >= 0.0)) throw validation_error("Dirichlet concentration a must be >= 0");
  return {Kind::kDirichletBayes, a};
}

std::string kind_name(Kind kind) {
  switch (kind) {
    case Kind::kMle: return "mle";
    case Kind::kMillerMadow: return "miller_madow";
    case Kind::kDirichletPlugin: return "dirichlet_plugin";
    case Kind::kDirichletBayes: return "dirichlet_bayes";
  }
  throw validation_error("unknown estimator kind");
}

Kind parse_kind(std::string_view name) {
  if (name == "mle") return Kind::kMle;
  if (name == "miller_madow") return Kind::kMillerMadow;
  if (name == "dirichlet_plugin") return Kind::kDirichletPlugin;
  if (name == "dirichlet_bayes") return Kind::kDirichletBayes;
  throw validation_error("unknown estimator kind: " + std::string(name));
}

SmoothedDistribution smooth(const Counts& counts, double a) {
  if (!(a >= 0.0)) throw validation_error("Dirichlet concentration a must be >= 0");
  const double n = static_cast<double>(counts.total());
  const double s = static_cast<double>(counts.support_size());
  const double denom = n + s * a;
  std::vector<double> probs(counts.values().size());
  for (std::size_t i = 0; i < probs.size(); ++i) {
    probs[i] = (static_cast<double>(counts[i]) + a) / denom;
  }
  return {Distribution(std::move(probs)), n / denom};
}

Distribution smooth_distribution(const Distribution& p, double n, double a) {
  if (!(a >= 0.0)) throw validation_error("Dirichlet concentration a must be >= 0");
  if (!(n > 0.0)) throw validation_error("sample size n must be positive");
  const double s = static_cast<double>(p.support_size());
  const double denom = n + s * a;
  std::vector<double> probs(p.probs().size());
  for (std::size_t i = 0; i < probs.size(); ++i) {
    probs[i] = (n * p[i] + a) / denom;
  }
  return Distribution(std::move(probs));
}

namespace {

double bayes_estimate(const Counts& counts, double a) {
  const double n = static_cast<double>(counts.total());
  const double s = static_cast<double>(counts.support_size());
  const double total_mass = s * a + n;
  std::vector<double> terms(counts.values().size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const double ai = a + static_cast<double>(counts[i]);
    terms[i] = ai / total_mass * digamma(ai + 1.0);
  }
  return digamma(total_mass + 1.0) - pairwise_sum(terms);
}

}  // namespace

double estimate(const EstimatorKind& kind, const Counts& counts) {
  switch (kind.kind) {
    case Kind::kMle:
      return entropy(counts.empirical());
    case Kind::kMillerMadow: {
      const double correction = static_cast<double>(counts.support_size() - 1) /
                                (2.0 * static_cast<double>(counts.total()));
      return entropy(counts.empirical()) + correction;
    }
    case Kind::kDirichletPlugin:
      if (kind.a == 0.0) return entropy(counts.empirical());
      return entropy(smooth(counts, kind.a).distribution);
    case Kind::kDirichletBayes:
      if (kind.a == 0.0) return entropy(counts.empirical());
      return bayes_estimate(counts, kind.a);
  }
  throw validation_error("unknown estimator kind");
}

}  // namespace entropy_lab
