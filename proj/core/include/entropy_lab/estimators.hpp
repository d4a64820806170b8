#pragma once

#include <string>
#include <string_view>

#include "entropy_lab/distribution.hpp"

namespace entropy_lab {

enum class Kind {
  kMle,
  kMillerMadow,
  kDirichletPlugin,
  kDirichletBayes,
};

/// An entropy estimator choice. `a` is the symmetric Dirichlet concentration
/// and is meaningful for the two Dirichlet kinds only; a = 0 there makes them
/// coincide exactly with the MLE (the limit of vanishing prior weight).
struct EstimatorKind {
  Kind kind = Kind::kMle;
  double a = 0.0;

  static EstimatorKind mle() { return {Kind::kMle, 0.0}; }
  static EstimatorKind miller_madow() { return {Kind::kMillerMadow, 0.0}; }
  static EstimatorKind dirichlet_plugin(double a);
  static EstimatorKind dirichlet_bayes(double a);

  bool uses_prior() const {
    return kind == Kind::kDirichletPlugin || kind == Kind::kDirichletBayes;
  }
  /// The concentration that actually enters formulas (0 for MLE/Miller-Madow).
  double effective_a() const { return uses_prior() ? a : 0.0; }
};

/// Stable string tag used in CLI configs and CSV ("mle", "miller_madow",
/// "dirichlet_plugin", "dirichlet_bayes").
std::string kind_name(Kind kind);
Kind parse_kind(std::string_view name);

/// The posterior-mean distribution under a symmetric Dirichlet(a) prior:
/// entry i is (X_i + a)/(n + Sa), a convex combination of the empirical
/// distribution (weight n/(n+Sa)) and the uniform distribution.
struct SmoothedDistribution {
  Distribution distribution;
  double empirical_weight;  // n/(n+Sa)
};

SmoothedDistribution smooth(const Counts& counts, double a);

/// The same map applied to a true distribution: entry i is (n p_i + a)/(n + Sa).
Distribution smooth_distribution(const Distribution& p, double n, double a);

/// Entropy estimate in nats for the given counts.
double estimate(const EstimatorKind& kind, const Counts& counts);

}  // namespace entropy_lab
