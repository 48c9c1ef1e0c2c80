#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gstieltjes/polynomial.hpp"
#include "gstieltjes/sequences.hpp"
#include "gstieltjes/zero_stream.hpp"

namespace gstieltjes {

/// weight * (t - start)^d on [start, inf), zero before.
struct TruncatedPower {
  Rational start;
  Rational weight;
};

/// Piece i is valid on [t_i, t_{i+1}), the last one on [t_K, domain_end] (or [t_K, inf)).
/// The function is zero on (-inf, t_0). The zero function has no breakpoints.
class PiecewisePolynomial {
 public:
  PiecewisePolynomial() = default;
  PiecewisePolynomial(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces,
                      std::optional<Rational> domain_end = std::nullopt);

  /// Sum of the given truncated powers of a common degree. Every distinct start becomes a
  /// breakpoint, even where the sum happens to be smooth.
  static PiecewisePolynomial from_truncated_powers(std::vector<TruncatedPower> terms, int degree,
                                                   std::optional<Rational> domain_end = std::nullopt);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Polynomial>& pieces() const { return pieces_; }
  const std::optional<Rational>& domain_end() const { return domain_end_; }
  bool is_zero() const;
  int degree() const;

  /// Exact value; throws DomainError beyond domain_end.
  Rational operator()(const Rational& t) const;
  double evaluate(double t) const;

  PiecewisePolynomial derivative() const;
  bool is_continuous() const;
  /// Smallest breakpoint from which the function vanishes identically, if the last piece is
  /// zero; nullopt otherwise or when a domain end cuts the function off first.
  std::optional<Rational> support_end() const;

 private:
  std::size_t piece_index(const Rational& t) const;
  std::vector<Rational> breakpoints_;
  std::vector<Polynomial> pieces_;
  std::optional<Rational> domain_end_;
};

/// rho_ell(t) = sum (t - a_k)_+^ell - sum (t - b_k)_+^ell. ell >= 1.
PiecewisePolynomial build_rho(const SequencePair& pair, int ell);

/// Truncation of phi_ell(t) = sum_m mult_m rho_ell(t - lambda_m) to [0, t_max].
PiecewisePolynomial build_phi(const SequencePair& pair, int ell, const ZeroStream& zeros,
                              const Rational& t_max);

/// phi_ell from the zeros with index below `count`, defined on all of [0, inf).
PiecewisePolynomial build_phi_head(const SequencePair& pair, int ell, const ZeroStream& zeros,
                                   std::size_t count);

struct PieceCertificate {
  Rational lo;
  std::optional<Rational> hi;  // nullopt: unbounded last piece
  bool nonnegative;
  Rational point;  // a point of the piece: the minimum sample, negative if the piece is not
  Rational value;
};

struct NonnegativityCertificate {
  bool nonnegative;
  std::optional<Rational> witness;  // most negative sampled point when not non-negative
  Rational witness_value{0};
  std::vector<PieceCertificate> pieces;
};

/// Exact decision of pp >= 0 on its domain, by root isolation on every piece.
NonnegativityCertificate certify_nonnegative(const PiecewisePolynomial& pp);

/// Number of sign changes of pp' scanning left to right.
int monotonicity_changes(const PiecewisePolynomial& pp);

/// int_lo^hi pp(t) / (x + t)^order dt with exact piecewise antiderivatives. hi = nullopt
/// integrates to infinity and needs the last piece to have degree <= order - 2.
double stieltjes_range(const PiecewisePolynomial& pp, const Rational& x, int order, const Rational& lo,
                       const std::optional<Rational>& hi);

struct StieltjesResult {
  double value;
  bool converged;
  Rational t_max;  // upper limit of the last evaluation
  int doublings;
};

/// int_0^t_max pp(t)/(x+t)^order dt, doubling t_max until the relative change drops below
/// rel_tol. The last piece is taken to continue past its breakpoint; a domain end caps t_max.
StieltjesResult stieltjes_integral(const PiecewisePolynomial& pp, double x, int order, const Rational& t_max,
                                   double rel_tol = 1e-10, int max_doublings = 64);

/// int_0^inf e^{-st} pp(t) dt for s > 0.
double laplace_transform(const PiecewisePolynomial& pp, double s);

/// int t^i pp(t) dt over the whole support; requires compact support.
Rational moment(const PiecewisePolynomial& pp, int i);

/// CSV with header `t,<names...>` and rows t = lo, lo + step, ... <= hi, %.17g, LF endings.
void write_samples_csv(std::ostream& out, const std::vector<std::string>& names,
                       const std::vector<const PiecewisePolynomial*>& columns, const Rational& lo,
                       const Rational& hi, const Rational& step);

}  // namespace gstieltjes
