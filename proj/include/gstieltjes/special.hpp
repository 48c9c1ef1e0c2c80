#pragma once

#include <complex>

namespace gstieltjes {

/// log Gamma(x) for real x > 0 or non-integer negative x (log of the absolute value).
double log_gamma(double x);

/// A continuous branch of log Gamma(z) for z off the non-positive integers; the real part is
/// log|Gamma(z)|. Works on Re z = 0 for z != 0.
std::complex<double> log_gamma(std::complex<double> z);

/// psi^(k)(x), k >= 0.
double polygamma(int k, double x);

/// Hurwitz zeta(s, q) = sum_{n>=0} (n + q)^-s for integer s >= 2 and q > 0.
double hurwitz_zeta(int s, double q);

/// Euler's constant.
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

}  // namespace gstieltjes
