#include "gstieltjes/special.hpp"

#include <cmath>

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/polygamma.hpp>

#include "gstieltjes/errors.hpp"

namespace gstieltjes {

namespace {

bool is_pole(double x) { return x <= 0 && x == std::floor(x); }

}  // namespace

double log_gamma(double x) {
  if (!std::isfinite(x) || is_pole(x)) throw DomainError("log_gamma: pole or non-finite argument");
  return boost::math::lgamma(x);
}

std::complex<double> log_gamma(std::complex<double> z) {
  if (z.imag() == 0.0 && is_pole(z.real())) throw DomainError("log_gamma: pole at a non-positive integer");
  // Recurrence up to Re z >= 10, then Stirling. The sum of principal logs keeps the branch
  // continuous along vertical lines.
  std::complex<double> shift_log(0.0, 0.0);
  while (z.real() < 10.0) {
    shift_log += std::log(z);
    z += 1.0;
  }
  const double half_log_two_pi = 0.91893853320467274178032973640562;
  std::complex<double> result = (z - 0.5) * std::log(z) - z + half_log_two_pi;
  const std::complex<double> inv = 1.0 / z;
  const std::complex<double> inv2 = inv * inv;
  std::complex<double> p = inv;
  for (int k = 1; k <= 12; ++k) {
    const double b = boost::math::bernoulli_b2n<double>(k);
    result += b / (2.0 * k * (2.0 * k - 1.0)) * p;
    p *= inv2;
  }
  return result - shift_log;
}

double polygamma(int k, double x) {
  if (k < 0) throw DomainError("polygamma order must be non-negative");
  if (!std::isfinite(x) || is_pole(x)) throw DomainError("polygamma: pole or non-finite argument");
  if (k == 0) return boost::math::digamma(x);
  return boost::math::polygamma(k, x);
}

double hurwitz_zeta(int s, double q) {
  if (s < 2) throw DomainError("hurwitz_zeta needs integer s >= 2");
  if (!(q > 0)) throw DomainError("hurwitz_zeta needs q > 0");
  if (s > 30) {
    // Direct sum; the factorial route overflows and the terms fall off quickly here.
    double sum = 0.0;
    double u = q;
    for (;; u += 1.0) {
      const double term = std::pow(u, -s);
      sum += term;
      if (term <= 1e-18 * sum || sum == 0.0) break;
    }
    return sum + std::pow(u + 0.5, 1 - s) / (s - 1);
  }
  // zeta(s, q) = (-1)^s psi^(s-1)(q) / (s-1)!
  const double sign = (s % 2 == 0) ? 1.0 : -1.0;
  return sign * boost::math::polygamma(s - 1, q) / boost::math::factorial<double>(static_cast<unsigned>(s - 1));
}

}  // namespace gstieltjes
