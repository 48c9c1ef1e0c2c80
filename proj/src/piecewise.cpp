#include "gstieltjes/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <utility>

#include <boost/math/special_functions/factorials.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "gstieltjes/errors.hpp"

namespace gstieltjes {

PiecewisePolynomial::PiecewisePolynomial(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces,
                                         std::optional<Rational> domain_end)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)), domain_end_(std::move(domain_end)) {
  if (breakpoints_.size() != pieces_.size()) throw DomainError("one piece per breakpoint is required");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i)
    if (!(breakpoints_[i - 1] < breakpoints_[i])) throw DomainError("breakpoints must be strictly increasing");
  if (domain_end_ && !breakpoints_.empty() && *domain_end_ < breakpoints_.back())
    throw DomainError("domain end lies before the last breakpoint");
}

PiecewisePolynomial PiecewisePolynomial::from_truncated_powers(std::vector<TruncatedPower> terms, int degree,
                                                               std::optional<Rational> domain_end) {
  if (degree < 0) throw DomainError("negative degree");
  std::sort(terms.begin(), terms.end(),
            [](const TruncatedPower& x, const TruncatedPower& y) { return x.start < y.start; });
  std::vector<Rational> breakpoints;
  std::vector<Polynomial> pieces;
  Polynomial running;
  for (std::size_t i = 0; i < terms.size();) {
    const Rational start = terms[i].start;
    if (domain_end && (start > *domain_end || (degree > 0 && start == *domain_end))) break;
    Rational weight(0);
    for (; i < terms.size() && terms[i].start == start; ++i) weight += terms[i].weight;
    if (weight != 0) running += Polynomial::truncated_power_body(start, degree) * weight;
    breakpoints.push_back(start);
    pieces.push_back(running);
  }
  return PiecewisePolynomial(std::move(breakpoints), std::move(pieces), std::move(domain_end));
}

bool PiecewisePolynomial::is_zero() const {
  return std::all_of(pieces_.begin(), pieces_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

int PiecewisePolynomial::degree() const {
  int d = -1;
  for (const auto& p : pieces_) d = std::max(d, p.degree());
  return d;
}

std::size_t PiecewisePolynomial::piece_index(const Rational& t) const {
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  return static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
}

Rational PiecewisePolynomial::operator()(const Rational& t) const {
  if (domain_end_ && t > *domain_end_) throw DomainError("evaluation beyond the domain end");
  if (breakpoints_.empty() || t < breakpoints_.front()) return Rational(0);
  return pieces_[piece_index(t)](t);
}

double PiecewisePolynomial::evaluate(double t) const { return to_double((*this)(exact_rational(t))); }

PiecewisePolynomial PiecewisePolynomial::derivative() const {
  std::vector<Polynomial> d;
  d.reserve(pieces_.size());
  for (const auto& p : pieces_) d.push_back(p.derivative());
  return PiecewisePolynomial(breakpoints_, std::move(d), domain_end_);
}

bool PiecewisePolynomial::is_continuous() const {
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    const Rational left = i == 0 ? Rational(0) : pieces_[i - 1](breakpoints_[i]);
    if (left != pieces_[i](breakpoints_[i])) return false;
  }
  return true;
}

std::optional<Rational> PiecewisePolynomial::support_end() const {
  if (breakpoints_.empty()) return Rational(0);
  if (!pieces_.back().is_zero()) return std::nullopt;
  std::size_t j = pieces_.size();
  while (j > 0 && pieces_[j - 1].is_zero()) --j;
  if (j == pieces_.size()) return std::nullopt;
  return breakpoints_[j];
}

PiecewisePolynomial build_rho(const SequencePair& pair, int ell) {
  if (ell < 1) throw DomainError("rho_0 is a step function and is not represented; ell must be >= 1");
  if (pair.identical()) return {};
  std::vector<TruncatedPower> terms;
  for (const auto& v : pair.a()) terms.push_back({v, Rational(1)});
  for (const auto& v : pair.b()) terms.push_back({v, Rational(-1)});
  return PiecewisePolynomial::from_truncated_powers(std::move(terms), ell);
}

namespace {

void add_zero_terms(const SequencePair& pair, const Zero& z, std::vector<TruncatedPower>& terms) {
  for (const auto& v : pair.a()) terms.push_back({z.lambda + v, z.mult});
  for (const auto& v : pair.b()) terms.push_back({z.lambda + v, -z.mult});
}

}  // namespace

PiecewisePolynomial build_phi(const SequencePair& pair, int ell, const ZeroStream& zeros, const Rational& t_max) {
  if (ell < 1) throw DomainError("ell must be >= 1");
  if (t_max <= 0) throw DomainError("t_max must be positive");
  std::vector<TruncatedPower> terms;
  for (const auto& z : zeros.up_to(t_max)) add_zero_terms(pair, z, terms);
  return PiecewisePolynomial::from_truncated_powers(std::move(terms), ell, t_max);
}

PiecewisePolynomial build_phi_head(const SequencePair& pair, int ell, const ZeroStream& zeros, std::size_t count) {
  if (ell < 1) throw DomainError("ell must be >= 1");
  std::vector<TruncatedPower> terms;
  for (std::size_t i = 0; i < count; ++i) add_zero_terms(pair, zeros.at(i), terms);
  return PiecewisePolynomial::from_truncated_powers(std::move(terms), ell);
}

namespace {

struct PieceSpan {
  Rational lo;
  std::optional<Rational> hi;
};

PieceSpan span_of(const PiecewisePolynomial& pp, std::size_t i) {
  const auto& bp = pp.breakpoints();
  if (i + 1 < bp.size()) return {bp[i], bp[i + 1]};
  return {bp[i], pp.domain_end()};
}

Rational interior_point(const PieceSpan& s) { return s.hi ? (s.lo + *s.hi) / 2 : s.lo + 1; }

}  // namespace

NonnegativityCertificate certify_nonnegative(const PiecewisePolynomial& pp) {
  NonnegativityCertificate cert{true, std::nullopt, Rational(0), {}};
  const auto& pieces = pp.pieces();

  // Cheap pre-filter on piece midpoints; it also supplies the reported witness.
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    PieceSpan s = span_of(pp, i);
    if (s.hi && *s.hi <= s.lo) continue;
    Rational t = interior_point(s);
    Rational v = pieces[i](t);
    if (v < cert.witness_value) {
      cert.witness = t;
      cert.witness_value = v;
    }
  }

  for (std::size_t i = 0; i < pieces.size(); ++i) {
    PieceSpan s = span_of(pp, i);
    const Polynomial& p = pieces[i];
    PieceCertificate pc{s.lo, s.hi, true, s.lo, p(s.lo)};
    auto consider = [&](const Rational& t, const Rational& v) {
      if (v < pc.value) {
        pc.point = t;
        pc.value = v;
      }
    };
    if (!p.is_zero() && !(s.hi && *s.hi <= s.lo)) {
      for (const auto& g : gap_samples(p, s.lo, s.hi)) consider(g.point, p(g.point));
    }
    if (s.hi && i + 1 == pieces.size()) consider(*s.hi, p(*s.hi));
    pc.nonnegative = pc.value >= 0;
    if (!pc.nonnegative) {
      cert.nonnegative = false;
      if (!cert.witness || pc.value < cert.witness_value) {
        cert.witness = pc.point;
        cert.witness_value = pc.value;
      }
    }
    cert.pieces.push_back(std::move(pc));
  }
  if (cert.nonnegative) {
    cert.witness.reset();
    cert.witness_value = 0;
  }
  return cert;
}

int monotonicity_changes(const PiecewisePolynomial& pp) {
  const PiecewisePolynomial d = pp.derivative();
  int changes = 0;
  int last = 0;
  for (std::size_t i = 0; i < d.pieces().size(); ++i) {
    PieceSpan s = span_of(d, i);
    if (s.hi && *s.hi <= s.lo) continue;
    for (const auto& g : gap_samples(d.pieces()[i], s.lo, s.hi)) {
      if (g.sign == 0) continue;
      if (last != 0 && g.sign != last) ++changes;
      last = g.sign;
    }
  }
  return changes;
}

namespace {

Rational signed_power(const Rational& w, int e) {
  return e >= 0 ? power(w, static_cast<unsigned>(e)) : Rational(1) / power(w, static_cast<unsigned>(-e));
}

// int_{t1}^{t2} P(t) / (x + t)^order dt. With w = x + t the integrand is a Laurent polynomial
// in w; every power term is summed exactly and only the logarithm is taken in floating point.
double piece_stieltjes(const Polynomial& p, const Rational& x, int order, const Rational& t1,
                       const std::optional<Rational>& t2) {
  if (p.is_zero()) return 0.0;
  const Polynomial c = p.taylor_shift(-x);
  const Rational w1 = x + t1;
  const std::optional<Rational> w2 = t2 ? std::optional<Rational>(x + *t2) : std::nullopt;
  Rational exact(0);
  double log_part = 0.0;
  for (int i = 0; i <= c.degree(); ++i) {
    const Rational& ci = c.coefficients()[static_cast<std::size_t>(i)];
    if (ci == 0) continue;
    const int e = i - order + 1;  // exponent of the antiderivative
    if (!w2 && e >= 0) throw DomainError("Stieltjes integral diverges: density grows too fast");
    if (e == 0) {
      log_part += to_double(ci) * std::log1p(to_double((*w2 - w1) / w1));
    } else {
      Rational upper = w2 ? signed_power(*w2, e) : Rational(0);
      exact += ci * (upper - signed_power(w1, e)) / Rational(e);
    }
  }
  return to_double(exact) + log_part;
}

}  // namespace

double stieltjes_range(const PiecewisePolynomial& pp, const Rational& x, int order, const Rational& lo,
                       const std::optional<Rational>& hi) {
  if (x <= 0) throw DomainError("x must be positive");
  if (order < 1) throw DomainError("order must be >= 1");
  if (lo + x <= 0) throw DomainError("integration range reaches the pole at -x");
  if (hi && *hi <= lo) return 0.0;
  const auto& bp = pp.breakpoints();
  if (pp.domain_end() && (!hi || *hi > *pp.domain_end()))
    throw DomainError("integration range exceeds the domain of the piecewise polynomial");
  double total = 0.0;
  for (std::size_t i = 0; i < bp.size(); ++i) {
    PieceSpan s = span_of(pp, i);
    Rational a = std::max(s.lo, lo);
    std::optional<Rational> b = s.hi;
    if (hi && (!b || *hi < *b)) b = *hi;
    if (b && *b <= a) continue;
    total += piece_stieltjes(pp.pieces()[i], x, order, a, b);
  }
  return total;
}

StieltjesResult stieltjes_integral(const PiecewisePolynomial& pp, double x, int order, const Rational& t_max,
                                   double rel_tol, int max_doublings) {
  if (!(x > 0)) throw DomainError("x must be positive");
  if (t_max <= 0) throw DomainError("t_max must be positive");
  const Rational xr = exact_rational(x);
  Rational T = t_max;
  if (pp.domain_end() && T > *pp.domain_end()) T = *pp.domain_end();
  double value = stieltjes_range(pp, xr, order, Rational(0), T);
  for (int k = 0; k < max_doublings; ++k) {
    Rational next = T * 2;
    if (pp.domain_end() && next > *pp.domain_end()) next = *pp.domain_end();
    if (next == T) return {value, false, T, k};
    double v = stieltjes_range(pp, xr, order, Rational(0), next);
    T = next;
    bool done = std::abs(v - value) <= rel_tol * std::abs(v);
    value = v;
    if (done) return {value, true, T, k + 1};
  }
  return {value, false, T, max_doublings};
}

double laplace_transform(const PiecewisePolynomial& pp, double s) {
  if (!(s > 0)) throw DomainError("Laplace transform needs s > 0");
  double total = 0.0;
  for (std::size_t i = 0; i < pp.pieces().size(); ++i) {
    const Polynomial& p = pp.pieces()[i];
    if (p.is_zero()) continue;
    PieceSpan span = span_of(pp, i);
    if (span.hi && *span.hi <= span.lo) continue;
    const Polynomial q = p.taylor_shift(span.lo);
    const double length = span.hi ? to_double(*span.hi - span.lo) : 0.0;
    double piece = 0.0;
    for (int j = 0; j <= q.degree(); ++j) {
      const double cj = to_double(q.coefficients()[static_cast<std::size_t>(j)]);
      if (cj == 0.0) continue;
      // int_0^L u^j e^{-su} du = j! / s^{j+1} * P(j+1, sL)
      double full = boost::math::factorial<double>(static_cast<unsigned>(j)) / std::pow(s, j + 1);
      if (span.hi) full *= boost::math::gamma_p(static_cast<double>(j + 1), s * length);
      piece += cj * full;
    }
    total += std::exp(-s * to_double(span.lo)) * piece;
  }
  return total;
}

Rational moment(const PiecewisePolynomial& pp, int i) {
  if (!pp.domain_end() && !pp.support_end()) throw DomainError("moment of a function without compact support");
  Rational total(0);
  for (std::size_t k = 0; k < pp.pieces().size(); ++k) {
    const Polynomial& p = pp.pieces()[k];
    PieceSpan s = span_of(pp, k);
    if (p.is_zero() || !s.hi) continue;
    for (int j = 0; j <= p.degree(); ++j) {
      const int e = i + j + 1;
      total += p.coefficients()[static_cast<std::size_t>(j)] *
               (power(*s.hi, static_cast<unsigned>(e)) - power(s.lo, static_cast<unsigned>(e))) / Rational(e);
    }
  }
  return total;
}

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_samples_csv(std::ostream& out, const std::vector<std::string>& names,
                       const std::vector<const PiecewisePolynomial*>& columns, const Rational& lo,
                       const Rational& hi, const Rational& step) {
  if (step <= 0) throw DomainError("sampling step must be positive");
  if (names.size() != columns.size()) throw DomainError("one name per column is required");
  out << 't';
  for (const auto& n : names) out << ',' << n;
  out << '\n';
  for (Rational t = lo; t <= hi; t += step) {
    out << format_double(to_double(t));
    for (const auto* c : columns) out << ',' << format_double(to_double((*c)(t)));
    out << '\n';
  }
}

}  // namespace gstieltjes
