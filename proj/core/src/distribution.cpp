#include "entropy_lab/distribution.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "entropy_lab/errors.hpp"
#include "entropy_lab/numeric.hpp"

namespace entropy_lab {

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw validation_error("distribution must have at least one symbol");
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0)) throw validation_error("distribution entry is negative or NaN");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kProbabilitySumTolerance) {
    throw validation_error("distribution entries sum to " + std::to_string(sum) + ", not 1");
  }
}

Counts::Counts(std::vector<std::int64_t> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) throw validation_error("count vector must have at least one symbol");
  for (std::int64_t c : counts_) {
    if (c < 0) throw validation_error("count entry is negative");
    total_ += c;
  }
  if (total_ < 1) throw validation_error("sample size n must be at least 1");
}

Distribution Counts::empirical() const {
  std::vector<double> probs(counts_.size());
  const double n = static_cast<double>(total_);
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    probs[i] = static_cast<double>(counts_[i]) / n;
  }
  return Distribution(std::move(probs));
}

double entropy(const Distribution& p) {
  std::vector<double> terms(p.probs().size());
  for (std::size_t i = 0; i < terms.size(); ++i) terms[i] = neg_xlogx(p[i]);
  const double h = pairwise_sum(terms);
  // Clamp tiny negative rounding residue from near-point-mass vectors.
  return h < 0.0 ? 0.0 : h;
}

double l1_distance(const Distribution& p, const Distribution& q) {
  if (p.support_size() != q.support_size()) {
    throw validation_error("L1 distance requires equal support sizes");
  }
  double d = 0.0;
  for (int i = 0; i < p.support_size(); ++i) d += std::abs(p[i] - q[i]);
  return d;
}

double kl_divergence(const Distribution& p, const Distribution& q) {
  if (p.support_size() != q.support_size()) {
    throw validation_error("KL divergence requires equal support sizes");
  }
  double d = 0.0;
  for (int i = 0; i < p.support_size(); ++i) {
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) throw domain_error("KL divergence undefined: q_i = 0 where p_i > 0");
    d += p[i] * std::log(p[i] / q[i]);
  }
  return d < 0.0 ? 0.0 : d;
}

Distribution make_point_mass(int support_size) {
  if (support_size < 1) throw validation_error("support size must be >= 1");
  std::vector<double> probs(static_cast<std::size_t>(support_size), 0.0);
  probs[0] = 1.0;
  return Distribution(std::move(probs));
}

Distribution make_uniform(int support_size) {
  if (support_size < 1) throw validation_error("support size must be >= 1");
  std::vector<double> probs(static_cast<std::size_t>(support_size),
                            1.0 / static_cast<double>(support_size));
  return Distribution(std::move(probs));
}

Distribution make_two_level(int support_size, double heavy_mass) {
  if (support_size < 2) throw validation_error("two-level family needs support size >= 2");
  const double lo = 1.0 / static_cast<double>(support_size);
  if (!(heavy_mass >= lo && heavy_mass <= 1.0)) {
    throw validation_error("heavy_mass must lie in [1/S, 1]");
  }
  std::vector<double> probs(static_cast<std::size_t>(support_size),
                            (1.0 - heavy_mass) / static_cast<double>(support_size - 1));
  probs[0] = heavy_mass;
  return Distribution(std::move(probs));
}

}  // namespace entropy_lab
