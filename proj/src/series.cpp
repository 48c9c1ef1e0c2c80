#include "gstieltjes/series.hpp"

#include <cmath>

#include "gstieltjes/errors.hpp"
#include "gstieltjes/special.hpp"

namespace gstieltjes {

namespace {

double generalized_binomial_neg(int e, int r) {
  // binom(-e, r) = (-1)^r binom(e + r - 1, r)
  double b = 1.0;
  for (int i = 0; i < r; ++i) b *= static_cast<double>(e + i) / static_cast<double>(i + 1);
  return (r % 2 == 0) ? b : -b;
}

double zeta_checked(int s, double q) {
  if (s < 2) throw DomainError("zero series diverges: the summand does not decay fast enough");
  return hurwitz_zeta(s, q);
}

}  // namespace

SeriesValue sum_over_zeros(const ZeroStream& zeros, double x, const std::function<double(double)>& head,
                           const std::vector<double>& coeffs, double switch_at, long max_terms) {
  SeriesValue out{0.0, 0.0, 0};
  long double acc = 0.0L;
  if (zeros.is_finite()) {
    if (!zeros.complete()) throw DomainError("insufficient zeros");
    for (std::size_t i = 0; i < zeros.size(); ++i) {
      const Zero z = zeros.at(i);
      acc += static_cast<long double>(to_double(z.mult) * head(to_double(z.lambda)));
      ++out.terms;
    }
    out.value = static_cast<double>(acc);
    return out;
  }

  const int beta = zeros.exponent();
  const Rational xr = exact_rational(x);
  // Head: exact terms until y reaches the switch point (and, for squared lattices, until the
  // binomial expansion in x / u^2 converges quickly).
  long k = zeros.first_index();
  for (;; ++k) {
    const Rational u = Rational(k) + zeros.shift();
    const double ud = to_double(u);
    const double lambda = beta == 1 ? ud : ud * ud;
    const double y = x + lambda;
    if (y >= switch_at && ud > 0 && (beta == 1 || ud * ud >= 4.0 * std::abs(x))) break;
    const double m = to_double(zeros.mult_poly()(Rational(k)));
    if (m != 0.0) acc += static_cast<long double>(m * head(lambda));
    if (++out.terms > max_terms) throw BudgetError("zero series head exceeded its term budget", static_cast<double>(acc), INFINITY);
  }

  // Tail: multiplicity re-expanded in the Hurwitz variable w.
  const Rational uK = Rational(k) + zeros.shift();
  Polynomial q;
  double wK;
  if (beta == 1) {
    // w = x + u = x + k + shift, so k = w - x - shift.
    q = zeros.mult_poly().taylor_shift(-xr - zeros.shift());
    wK = to_double(xr + uK);
  } else {
    // w = u = k + shift.
    q = zeros.mult_poly().taylor_shift(-zeros.shift());
    wK = to_double(uK);
  }
  std::vector<double> qd;
  for (const auto& c : q.coefficients()) qd.push_back(to_double(c));

  long double tail = 0.0L;
  double last_term = 0.0;
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    const double ce = coeffs[e];
    if (ce == 0.0) continue;
    const int ei = static_cast<int>(e);
    double term = 0.0;
    if (beta == 1) {
      for (std::size_t i = 0; i < qd.size(); ++i)
        if (qd[i] != 0.0) term += qd[i] * zeta_checked(ei - static_cast<int>(i), wK);
    } else {
      const double ratio = x / (wK * wK);
      for (int r = 0;; ++r) {
        const double coef = generalized_binomial_neg(ei, r) * std::pow(x, r);
        double part = 0.0;
        for (std::size_t i = 0; i < qd.size(); ++i)
          if (qd[i] != 0.0) part += qd[i] * zeta_checked(2 * ei + 2 * r - static_cast<int>(i), wK);
        term += coef * part;
        if (std::abs(generalized_binomial_neg(ei, r + 1)) * std::pow(std::abs(ratio), r + 1) < 1e-18 || r > 200) break;
      }
    }
    tail += static_cast<long double>(ce * term);
    last_term = ce * term;
  }
  out.value = static_cast<double>(acc + tail);
  out.error = std::abs(last_term);
  return out;
}

}  // namespace gstieltjes
