#include "gstieltjes/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "gstieltjes/errors.hpp"

namespace gstieltjes {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::truncated_power_body(const Rational& start, int degree) {
  // (t - s)^d = sum_j C(d, j) (-s)^(d-j) t^j
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  Rational binom(1);
  const Rational minus_s = -start;
  for (int j = 0; j <= degree; ++j) {
    c[static_cast<std::size_t>(j)] = binom * power(minus_s, static_cast<unsigned>(degree - j));
    binom = binom * Rational(degree - j) / Rational(j + 1);
  }
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double Polynomial::evaluate(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + to_double(*it);
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::taylor_shift(const Rational& c) const {
  // Horner-style synthetic substitution: repeated p(u + c) accumulation.
  std::vector<Rational> out = coeffs_;
  const std::size_t n = out.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) out[j - 1] += c * out[j];
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

DivisionResult divide(const Polynomial& numerator, const Polynomial& denominator) {
  if (denominator.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = numerator.coefficients();
  const int dd = denominator.degree();
  if (numerator.degree() < dd) return {Polynomial{}, numerator};
  std::vector<Rational> quot(static_cast<std::size_t>(numerator.degree() - dd) + 1);
  const Rational& lead = denominator.leading();
  for (int i = numerator.degree(); i >= dd; --i) {
    const Rational factor = rem[static_cast<std::size_t>(i)] / lead;
    quot[static_cast<std::size_t>(i - dd)] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(i - dd + j)] -= factor * denominator.coefficient(j);
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial monic_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divide(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Rational(1) / a.leading());
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p;
  Polynomial g = monic_gcd(p, p.derivative());
  Polynomial q = divide(p, g).quotient;
  return q * (Rational(1) / q.leading());
}

SturmSequence::SturmSequence(const Polynomial& squarefree) {
  if (squarefree.is_zero()) return;
  chain_.push_back(squarefree);
  chain_.push_back(squarefree.derivative());
  while (!chain_.back().is_zero()) {
    Polynomial r = divide(chain_[chain_.size() - 2], chain_.back()).remainder;
    chain_.push_back(r * Rational(-1));
  }
  chain_.pop_back();
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int SturmSequence::variations_at(const Rational& t) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(sign(p(t)));
  return count_variations(signs);
}

int SturmSequence::variations_at_infinity() const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(p.is_zero() ? 0 : sign(p.leading()));
  return count_variations(signs);
}

int SturmSequence::count_between(const Rational& lo, const Rational& hi) const {
  return variations_at(lo) - variations_at(hi);
}

namespace {

// A split point strictly inside (lo, hi) that is not a root of q.
Rational split_point(const Polynomial& q, const Rational& lo, const Rational& hi) {
  for (int denom = 2;; ++denom) {
    for (int num = 1; num < denom; ++num) {
      Rational m = lo + (hi - lo) * Rational(num) / Rational(denom);
      if (q(m) != 0) return m;
    }
  }
}

void isolate(const Polynomial& q, const SturmSequence& sturm, const Rational& lo, const Rational& hi,
             int count, std::vector<RootEnclosure>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back({lo, hi});
    return;
  }
  Rational m = split_point(q, lo, hi);
  int left = sturm.count_between(lo, m);
  isolate(q, sturm, lo, m, left, out);
  isolate(q, sturm, m, hi, count - left, out);
}

// Shrinks an enclosure by one bisection step, keeping the side holding the root.
void refine(const Polynomial& q, const SturmSequence& sturm, RootEnclosure& e) {
  Rational m = split_point(q, e.lo, e.hi);
  if (sturm.count_between(e.lo, m) == 1)
    e.hi = m;
  else
    e.lo = m;
}

Rational cauchy_bound(const Polynomial& q) {
  Rational best(0);
  const Rational lead_abs = abs(q.leading());
  for (int i = 0; i < q.degree(); ++i) {
    Rational r = abs(q.coefficient(i)) / lead_abs;
    if (r > best) best = r;
  }
  return best + Rational(2);
}

struct Prepared {
  Polynomial q;
  Rational upper;
};

Prepared prepare(const Polynomial& p, const Rational& lo, const std::optional<Rational>& hi) {
  Polynomial q = squarefree_part(p);
  if (q.degree() >= 1 && q(lo) == 0) q = divide(q, Polynomial({-lo, Rational(1)})).quotient;
  if (hi && q.degree() >= 1 && q(*hi) == 0) q = divide(q, Polynomial({-*hi, Rational(1)})).quotient;
  Rational upper = hi ? *hi : Rational(0);
  if (!hi && q.degree() >= 1) {
    upper = cauchy_bound(q);
    if (upper <= lo) upper = lo + Rational(1);
  }
  return {std::move(q), std::move(upper)};
}

}  // namespace

std::vector<RootEnclosure> isolate_roots(const Polynomial& p, const Rational& lo,
                                         const std::optional<Rational>& hi) {
  if (p.is_zero()) throw DomainError("root isolation of the zero polynomial");
  if (hi && *hi <= lo) return {};
  Prepared prep = prepare(p, lo, hi);
  std::vector<RootEnclosure> out;
  if (prep.q.degree() < 1) return out;
  SturmSequence sturm(prep.q);
  isolate(prep.q, sturm, lo, prep.upper, sturm.count_between(lo, prep.upper), out);
  return out;
}

std::vector<GapSample> gap_samples(const Polynomial& p, const Rational& lo,
                                   const std::optional<Rational>& hi) {
  if (p.is_zero()) return {{hi ? (lo + *hi) / 2 : lo + 1, 0}};
  Prepared prep = prepare(p, lo, hi);
  std::vector<RootEnclosure> roots;
  std::optional<SturmSequence> sturm;
  if (prep.q.degree() >= 1) {
    sturm.emplace(prep.q);
    isolate(prep.q, *sturm, lo, prep.upper, sturm->count_between(lo, prep.upper), roots);
  }
  std::vector<Rational> points;
  if (roots.empty()) {
    points.push_back(hi ? (lo + *hi) / 2 : lo + 1);
  } else {
    while (roots.front().lo <= lo) refine(prep.q, *sturm, roots.front());
    if (hi)
      while (roots.back().hi >= *hi) refine(prep.q, *sturm, roots.back());
    points.push_back(roots.front().lo);
    for (const auto& r : roots) points.push_back(r.hi);
  }
  std::vector<GapSample> out;
  out.reserve(points.size());
  for (auto& pt : points) {
    int s = sign(p(pt));
    out.push_back({std::move(pt), s});
  }
  return out;
}

}  // namespace gstieltjes
