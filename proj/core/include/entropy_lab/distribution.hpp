#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace entropy_lab {

// Absolute tolerance on |sum(p) - 1| accepted by Distribution.
inline constexpr double kProbabilitySumTolerance = 1e-12;

/// A probability vector over a finite alphabet. Entries are validated on
/// construction: non-negative, summing to 1 within kProbabilitySumTolerance.
class Distribution {
 public:
  explicit Distribution(std::vector<double> probs);

  std::span<const double> probs() const { return probs_; }
  double operator[](std::size_t i) const { return probs_[i]; }
  int support_size() const { return static_cast<int>(probs_.size()); }

 private:
  std::vector<double> probs_;
};

/// An observed multinomial count vector with n = sum(counts) >= 1.
class Counts {
 public:
  explicit Counts(std::vector<std::int64_t> counts);

  std::span<const std::int64_t> values() const { return counts_; }
  std::int64_t operator[](std::size_t i) const { return counts_[i]; }
  int support_size() const { return static_cast<int>(counts_.size()); }
  std::int64_t total() const { return total_; }

  /// The empirical distribution counts/n.
  Distribution empirical() const;

 private:
  std::vector<std::int64_t> counts_;
  std::int64_t total_ = 0;
};

/// Shannon entropy sum p_i ln(1/p_i) in nats, with 0 ln(1/0) = 0.
double entropy(const Distribution& p);

/// L1 distance sum |p_i - q_i|; requires equal support sizes.
double l1_distance(const Distribution& p, const Distribution& q);

/// KL divergence sum p_i ln(p_i/q_i); requires q_i > 0 wherever p_i > 0.
double kl_divergence(const Distribution& p, const Distribution& q);

Distribution make_point_mass(int support_size);
Distribution make_uniform(int support_size);

/// One atom of mass heavy_mass, the remainder spread uniformly.
/// Requires support_size >= 2 and 1/S <= heavy_mass <= 1.
Distribution make_two_level(int support_size, double heavy_mass);

}  // namespace entropy_lab
