#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace entropy_lab {

// x * ln(x) extended continuously to x = 0.
double xlogx(double x);

// -x * ln(x); the per-symbol entropy term, 0 at both endpoints of [0,1].
double neg_xlogx(double x);

// Sum by recursive pairwise splitting. Deterministic for a given input order
// and more accurate than left-to-right accumulation on long vectors.
double pairwise_sum(std::span<const double> values);

// Mean via pairwise_sum; empty input returns 0.
double pairwise_mean(std::span<const double> values);

}  // namespace entropy_lab
