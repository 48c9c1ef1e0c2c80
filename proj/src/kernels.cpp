#include "gstieltjes/kernels.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "gstieltjes/errors.hpp"
#include "gstieltjes/piecewise.hpp"

namespace gstieltjes {

GKernel::GKernel(const SequencePair& pair, int ell) : ell_(ell), pte_(pte_degree(pair)) {
  if (ell < 1) throw DomainError("g_ell needs ell >= 1");
  for (const auto& v : pair.a()) a_.push_back(to_double(v));
  for (const auto& v : pair.b()) b_.push_back(to_double(v));
  c_ = to_double(pair.max_entry());
  if (pte_ == kInfiniteDegree) return;
  const int max_m = pte_ + 40;
  const std::vector<double> deltas = power_sum_deltas(pair, max_m);
  delta_.resize(deltas.size());
  for (std::size_t m = 0; m < deltas.size(); ++m)
    delta_[m] = deltas[m] / boost::math::factorial<double>(static_cast<unsigned>(m));
}

double GKernel::operator()(double s) const {
  if (!(s >= 0)) throw DomainError("g_ell needs s >= 0");
  if (pte_ == kInfiniteDegree) return 0.0;
  if (s == 0.0) {
    if (pte_ < ell_) throw DomainError("g_ell diverges at s = 0: pte degree is below ell");
    const double v = delta_[static_cast<std::size_t>(ell_ + 1)];
    return (ell_ % 2 == 1) ? v : -v;
  }
  if (c_ * s <= 1.0) {
    // sum_{m > pte} (-1)^m Delta_m s^{m - ell - 1} / m!
    double sum = 0.0;
    for (std::size_t m = static_cast<std::size_t>(pte_) + 1; m < delta_.size(); ++m) {
      const double term = delta_[m] * std::pow(s, static_cast<double>(m) - ell_ - 1);
      sum += (m % 2 == 0) ? term : -term;
    }
    return sum;
  }
  double num = 0.0;
  for (std::size_t k = 0; k < a_.size(); ++k) {
    // e^{-s a} - e^{-s b} = e^{-s a} (1 - e^{-s (b - a)}), factored at the smaller entry
    if (a_[k] <= b_[k])
      num -= std::exp(-s * a_[k]) * std::expm1(-s * (b_[k] - a_[k]));
    else
      num += std::exp(-s * b_[k]) * std::expm1(-s * (a_[k] - b_[k]));
  }
  return num / std::pow(s, ell_ + 1);
}

double g_ell(const SequencePair& pair, int ell, double s) { return GKernel(pair, ell)(s); }

namespace {

std::vector<double> to_doubles(const Polynomial& p) {
  std::vector<double> out;
  for (const auto& c : p.coefficients()) out.push_back(to_double(c));
  return out;
}

double horner(const std::vector<double>& c, double t) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

}  // namespace

KernelEval kernel_series(const EntireModel& model, KernelKind kind, double s, double tol, long max_terms) {
  if (!(s > 0)) throw DomainError("kernel series needs s > 0");
  KernelEval out{0.0, 0.0, 0, std::nullopt};
  if (kind == KernelKind::h && model.closed_h) out.closed_form = model.closed_h(s);
  const ZeroStream& zs = model.zeros;
  const bool squared = kind == KernelKind::xi;
  if (zs.is_finite()) {
    if (!zs.complete()) throw DomainError("insufficient zeros");
    long double acc = 0.0L;
    for (std::size_t i = 0; i < zs.size(); ++i) {
      const Zero z = zs.at(i);
      const double lambda = to_double(z.lambda);
      acc += to_double(z.mult) * std::exp(-s * (squared ? lambda * lambda : lambda));
    }
    out.value = static_cast<double>(acc);
    out.terms_used = static_cast<long>(zs.size());
    return out;
  }
  const std::vector<double> p = to_doubles(zs.mult_poly());
  const double shift = to_double(zs.shift());
  auto term = [&](long k) {
    const double u = static_cast<double>(k) + shift;
    return horner(p, static_cast<double>(k)) * std::exp(-s * (squared ? u * u : u));
  };
  long double acc = 0.0L;
  for (long k = zs.first_index();; ++k) {
    acc += term(k);
    ++out.terms_used;
    const double next = term(k + 1);
    const double after = term(k + 2);
    const double ratio = next > 0 ? after / next : 0.0;
    if (ratio < 1.0) {
      const double bound = next / (1.0 - ratio);
      if (bound < tol) {
        out.value = static_cast<double>(acc);
        out.trunc_error_bound = bound;
        return out;
      }
    }
    if (out.terms_used >= max_terms) {
      const double bound = ratio < 1.0 ? next / (1.0 - ratio) : INFINITY;
      throw BudgetError("kernel series did not reach the tolerance within the term budget",
                        static_cast<double>(acc), bound);
    }
  }
}

KernelFunction::KernelFunction(const EntireModel& model, KernelKind kind) : kind_(kind), zeros_(model.zeros) {
  if (zeros_.is_finite()) {
    if (!zeros_.complete()) throw DomainError("insufficient zeros");
    for (std::size_t i = 0; i < zeros_.size(); ++i) {
      const Zero z = zeros_.at(i);
      const double lambda = to_double(z.lambda);
      finite_lambda_.push_back(kind == KernelKind::xi ? lambda * lambda : lambda);
      finite_mult_.push_back(to_double(z.mult));
    }
    return;
  }
  if (zeros_.exponent() != 1) throw DomainError("kernel of a squared lattice is not supported");
  const int deg = zeros_.mult_poly().degree();
  if (kind == KernelKind::h) {
    singularity_ = deg + 1;
    // R(j) = P(j + k0) in the basis binom(j + i, i), whose generating functions are (1-r)^{-i-1}.
    Polynomial r = zeros_.mult_poly().taylor_shift(Rational(zeros_.first_index()));
    beta_.assign(static_cast<std::size_t>(deg) + 1, 0.0);
    for (int i = deg; i >= 0; --i) {
      Polynomial basis = Polynomial::constant(Rational(1));
      for (int t = 1; t <= i; ++t) basis = basis * Polynomial({Rational(t), Rational(1)}) * (Rational(1) / Rational(t));
      const Rational coef = r.coefficient(i) / basis.coefficient(i);
      beta_[static_cast<std::size_t>(i)] = to_double(coef);
      r -= basis * coef;
    }
    offset_ = to_double(Rational(zeros_.first_index()) + zeros_.shift());
  } else {
    singularity_ = (deg + 1) / 2.0;
    q_ = to_doubles(zeros_.mult_poly().taylor_shift(-zeros_.shift()));
    u0_ = to_double(Rational(zeros_.first_index()) + zeros_.shift());
    if (u0_ < 0) throw DomainError("xi needs non-negative lattice values");
  }
}

double KernelFunction::operator()(double s) const {
  if (!(s > 0)) throw DomainError("kernel needs s > 0");
  if (!finite_lambda_.empty() || zeros_.is_finite()) {
    double sum = 0.0;
    for (std::size_t i = 0; i < finite_lambda_.size(); ++i) sum += finite_mult_[i] * std::exp(-s * finite_lambda_[i]);
    return sum;
  }
  if (kind_ == KernelKind::xi) return xi_lattice(s);
  const double d = -std::expm1(-s);
  double sum = 0.0;
  double p = 1.0 / d;
  for (double b : beta_) {
    sum += b * p;
    p /= d;
  }
  return std::exp(-offset_ * s) * sum;
}

double KernelFunction::xi_lattice(double s) const {
  const double deg = static_cast<double>(q_.size()) - 1.0;
  if (s >= 0.05) {
    const double peak = std::sqrt(std::max(deg, 0.0) / (2.0 * s));
    double sum = 0.0;
    for (double u = u0_;; u += 1.0) {
      const double t = horner(q_, u) * std::exp(-s * u * u);
      sum += t;
      if (u > peak && std::abs(t) <= 1e-18 * std::abs(sum)) return sum;
    }
  }
  // Euler-Maclaurin from u0: int + F(u0)/2 - sum_j B_2j/(2j)! F^(2j-1)(u0).
  double integral = 0.0;
  for (std::size_t i = 0; i < q_.size(); ++i) {
    if (q_[i] == 0.0) continue;
    const double a = (static_cast<double>(i) + 1.0) / 2.0;
    const double g = u0_ == 0.0 ? boost::math::tgamma(a) : boost::math::tgamma(a, s * u0_ * u0_);
    integral += q_[i] * 0.5 * std::pow(s, -a) * g;
  }
  // Taylor coefficients at u0 of Q(u0 + t) and of exp(-2 s u0 t - s t^2).
  const int n_max = 81;
  std::vector<double> qs(q_.size(), 0.0);
  for (std::size_t i = 0; i < q_.size(); ++i) {
    // binomial re-expansion of q_i (u0 + t)^i
    double binom = 1.0;
    for (std::size_t j = 0; j <= i; ++j) {
      qs[j] += q_[i] * binom * std::pow(u0_, static_cast<double>(i - j));
      binom = binom * static_cast<double>(i - j) / static_cast<double>(j + 1);
    }
  }
  std::vector<double> e(n_max + 1, 0.0);
  e[0] = 1.0;
  const double g1 = -2.0 * s * u0_;
  const double g2 = -s;
  for (int n = 0; n < n_max; ++n) {
    double v = g1 * e[static_cast<std::size_t>(n)];
    if (n >= 1) v += 2.0 * g2 * e[static_cast<std::size_t>(n - 1)];
    e[static_cast<std::size_t>(n + 1)] = v / (n + 1);
  }
  auto f = [&](int n) {
    double sum = 0.0;
    for (std::size_t i = 0; i < qs.size() && static_cast<int>(i) <= n; ++i) sum += qs[i] * e[static_cast<std::size_t>(n) - i];
    return sum;
  };
  const double scale = std::exp(-s * u0_ * u0_);
  double sum = integral + 0.5 * scale * qs[0];
  double previous = INFINITY;
  for (int j = 1; 2 * j - 1 <= n_max; ++j) {
    // B_2j/(2j)! * F^(2j-1)(u0) = B_2j/(2j) * scale * f_{2j-1}
    const double term = boost::math::bernoulli_b2n<double>(j) / (2.0 * j) * scale * f(2 * j - 1);
    if (term == 0.0) continue;
    if (std::abs(term) > previous) break;
    sum -= term;
    previous = std::abs(term);
    if (previous <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

LaplaceRhoCheck laplace_rho_identity(const SequencePair& pair, int ell, double s) {
  if (!(s > 0)) throw DomainError("laplace_rho_identity needs s > 0");
  const double lhs = g_ell(pair, ell, s);
  const double rhs = laplace_transform(build_rho(pair, ell), s) / boost::math::factorial<double>(static_cast<unsigned>(ell));
  return {lhs, rhs, std::abs(lhs - rhs)};
}

}  // namespace gstieltjes
