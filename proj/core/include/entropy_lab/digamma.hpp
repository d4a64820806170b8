#pragma once

namespace entropy_lab {

/// Digamma function psi(x) = d/dx ln Gamma(x) for x > 0.
///
/// Upward recurrence psi(x+1) = psi(x) + 1/x shifts the argument to >= 8,
/// then the asymptotic expansion is summed through the x^-12 term. Absolute
/// error is a few ulp of the result across (0, 1e9]; in particular within
/// 1e-12 wherever the result is representable at that resolution.
double digamma(double x);

}  // namespace entropy_lab
