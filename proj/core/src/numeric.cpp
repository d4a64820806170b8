#include "entropy_lab/numeric.hpp"

#include <cmath>

namespace entropy_lab {

double xlogx(double x) {
  return x > 0.0 ? x * std::log(x) : 0.0;
}

double neg_xlogx(double x) {
  return x > 0.0 ? -x * std::log(x) : 0.0;
}

namespace {

double pairwise_sum_impl(const double* data, std::size_t count) {
  // Below this the loop is cheaper than recursion and rounding is harmless.
  constexpr std::size_t kBlock = 32;
  if (count <= kBlock) {
    double acc = 0.0;
    for (std::size_t i = 0; i < count; ++i) acc += data[i];
    return acc;
  }
  const std::size_t half = count / 2;
  return pairwise_sum_impl(data, half) + pairwise_sum_impl(data + half, count - half);
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
  return pairwise_sum_impl(values.data(), values.size());
}

double pairwise_mean(std::span<const double> values) {
  if (values.empty()) return 0.0;
  return pairwise_sum(values) / static_cast<double>(values.size());
}

}  // namespace entropy_lab
