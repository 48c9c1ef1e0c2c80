#pragma once

#include <optional>
#include <vector>

#include "gstieltjes/rational.hpp"

namespace gstieltjes {

/// Univariate polynomial with exact rational coefficients, stored in ascending order.
/// The zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  /// (t - start)^degree expanded in powers of t.
  static Polynomial truncated_power_body(const Rational& start, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int i) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& t) const;
  double evaluate(double t) const;

  Polynomial derivative() const;
  /// q(u) = p(u + c).
  Polynomial taylor_shift(const Rational& c) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

DivisionResult divide(const Polynomial& numerator, const Polynomial& denominator);
Polynomial monic_gcd(Polynomial a, Polynomial b);
/// Same distinct roots as p, each with multiplicity one.
Polynomial squarefree_part(const Polynomial& p);

class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& squarefree);
  int variations_at(const Rational& t) const;
  int variations_at_infinity() const;
  /// Number of distinct roots in the open interval (lo, hi); neither endpoint may be a root.
  int count_between(const Rational& lo, const Rational& hi) const;

 private:
  std::vector<Polynomial> chain_;
};

/// Open interval (lo, hi) holding exactly one root; lo and hi are not roots.
struct RootEnclosure {
  Rational lo;
  Rational hi;
};

/// A point strictly inside a maximal root-free sub-interval of an interval, with the sign
/// the polynomial takes on that whole sub-interval.
struct GapSample {
  Rational point;
  int sign;
};

/// Isolates the distinct real roots of p in the open interval (lo, hi); hi = nullopt means +inf.
std::vector<RootEnclosure> isolate_roots(const Polynomial& p, const Rational& lo,
                                         const std::optional<Rational>& hi);

/// One sample per root-free gap of (lo, hi), ordered left to right. For the zero polynomial
/// a single sample with sign 0 is returned.
std::vector<GapSample> gap_samples(const Polynomial& p, const Rational& lo,
                                   const std::optional<Rational>& hi);

}  // namespace gstieltjes
