#include "entropy_lab/digamma.hpp"

#include <cmath>

#include "entropy_lab/errors.hpp"

namespace entropy_lab {

namespace {

// B_{2k}/(2k) for k = 1..6; the expansion is
//   psi(x) ~ ln x - 1/(2x) - sum_k B_{2k}/(2k) x^{-2k}.
// Truncating after the x^-12 term leaves an error below 2e-14 for x >= 8.
constexpr double kAsym[6] = {
    1.0 / 12.0,        -1.0 / 120.0,      1.0 / 252.0,
    -1.0 / 240.0,      1.0 / 132.0,       -691.0 / 32760.0,
};

}  // namespace

double digamma(double x) {
  if (!(x > 0.0)) throw domain_error("digamma requires x > 0");

  double shift = 0.0;
  while (x < 8.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }

  const double z = 1.0 / (x * x);
  double series = kAsym[5];
  for (int k = 4; k >= 0; --k) series = series * z + kAsym[k];
  return shift + std::log(x) - 0.5 / x - z * series;
}

}  // namespace entropy_lab
