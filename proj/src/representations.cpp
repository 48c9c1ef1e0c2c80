#include "gstieltjes/representations.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <json.hpp>

#include "gstieltjes/errors.hpp"
#include "gstieltjes/kernels.hpp"
#include "gstieltjes/piecewise.hpp"
#include "gstieltjes/quadrature.hpp"
#include "gstieltjes/series.hpp"

namespace gstieltjes {

namespace {

constexpr int kExpansionTerms = 60;

// binom(-o, m) = (-1)^m binom(o + m - 1, m)
double neg_binom(int o, int m) {
  double b = 1.0;
  for (int i = 0; i < m; ++i) b *= static_cast<double>(o + i) / static_cast<double>(i + 1);
  return (m % 2 == 0) ? b : -b;
}

double factorial(int n) { return boost::math::factorial<double>(static_cast<unsigned>(n)); }

double switch_point(const SequencePair& pair) { return std::max(16.0, 8.0 * to_double(pair.max_entry())); }

// Coefficients c_e with sum_j [D^o log(y + a_j) - D^o log(y + b_j)] = sum_e c_e y^-e.
std::vector<double> zero_series_coeffs(const SequencePair& pair, int order, int pte) {
  const int max_m = pte + 1 + kExpansionTerms;
  const std::vector<double> delta = power_sum_deltas(pair, max_m);
  std::vector<double> c(static_cast<std::size_t>(order + max_m) + 1, 0.0);
  for (int m = pte + 1; m <= max_m; ++m) {
    const double dm = delta[static_cast<std::size_t>(m)];
    if (order == 0) {
      c[static_cast<std::size_t>(m)] = ((m % 2 == 1) ? 1.0 : -1.0) / m * dm;
    } else {
      const double pref = ((order % 2 == 1) ? 1.0 : -1.0) * factorial(order - 1);
      c[static_cast<std::size_t>(order + m)] = pref * neg_binom(order, m) * dm;
    }
  }
  return c;
}

std::vector<double> doubles(const std::vector<Rational>& v) {
  std::vector<double> out;
  for (const auto& x : v) out.push_back(to_double(x));
  return out;
}

void require_convergent(const RatioSpec& spec, int order) {
  if (spec.model.zeros.is_finite() || spec.pair.identical()) return;
  const int d = pte_degree(spec.pair);
  if (order + d < spec.model.genus)
    throw DomainError("zero series diverges: order + pte_degree (" + std::to_string(order) + " + " + std::to_string(d) +
                      ") is below the genus " + std::to_string(spec.model.genus));
}

}  // namespace

double dlogW_direct(const RatioSpec& spec, int order, double x, double tol, DirectMethod method) {
  (void)tol;
  if (!(x > 0)) throw DomainError("x must be positive");
  if (order < 0) throw DomainError("order must be >= 0");
  if (spec.pair.identical()) return 0.0;
  const std::vector<double> a = doubles(spec.pair.a());
  const std::vector<double> b = doubles(spec.pair.b());
  if (method == DirectMethod::oracle && !spec.model.direct_oracle)
    throw DomainError("model " + spec.model.name + " has no direct oracle");
  if (method != DirectMethod::series && spec.model.direct_oracle) {
    double sum = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k)
      sum += spec.model.direct_oracle(order, x + a[k]) - spec.model.direct_oracle(order, x + b[k]);
    return sum;
  }
  require_convergent(spec, order);
  const int d = pte_degree(spec.pair);
  auto head = [&](double lambda) {
    const double y = x + lambda;
    double sum = 0.0;
    if (order == 0) {
      for (std::size_t k = 0; k < a.size(); ++k) sum += std::log1p((a[k] - b[k]) / (y + b[k]));
      return sum;
    }
    for (std::size_t k = 0; k < a.size(); ++k) sum += std::pow(y + a[k], -order) - std::pow(y + b[k], -order);
    return ((order % 2 == 1) ? 1.0 : -1.0) * factorial(order - 1) * sum;
  };
  return sum_over_zeros(spec.model.zeros, x, head, zero_series_coeffs(spec.pair, order, d), switch_point(spec.pair))
      .value;
}

double laplace_integral(const RatioSpec& spec, int ell, int power, double x, double tol) {
  if (!(x > 0)) throw DomainError("x must be positive");
  if (spec.pair.identical()) return 0.0;
  const KernelFunction h(spec.model, KernelKind::h);
  const GKernel g(spec.pair, ell);
  const double alpha = power - h.singularity_order() + (std::min(g.pte(), ell) - ell);
  if (alpha <= -1.0) throw DomainError("Laplace integrand is not integrable at s = 0");
  auto f = [&](double s) { return std::exp(-s * x) * std::pow(s, power) * h(s) * g(s); };
  return integrate_half_line(f, tol).value;
}

double phi_stieltjes_integral(const RatioSpec& spec, int ell, int exponent, double x, double tol) {
  (void)tol;
  if (!(x > 0)) throw DomainError("x must be positive");
  if (spec.pair.identical()) return 0.0;
  const PiecewisePolynomial rho = build_rho(spec.pair, ell);
  const int d = pte_degree(spec.pair);
  const int o = exponent - ell - 1;
  if (o < 0) throw DomainError("Stieltjes exponent too small for rho_ell");
  const bool compact = d >= ell;
  if (!compact && o == 0) throw DomainError("Stieltjes integral diverges: rho_ell is not compactly supported");
  const ZeroStream& zs = spec.model.zeros;
  const Rational xr = exact_rational(x);
  if (zs.is_finite()) {
    if (!zs.complete()) throw DomainError("insufficient zeros");
    const PiecewisePolynomial phi = build_phi_head(spec.pair, ell, zs, zs.size());
    return stieltjes_range(phi, xr, exponent, Rational(0), std::nullopt);
  }
  if (zs.exponent() != 1) throw DomainError("phi needs a lattice in lambda");

  // phi from the zeros below the switch point is integrated exactly over [0, inf); each later
  // zero contributes J(x + lambda) = int rho(u) / (x + lambda + u)^exponent du, summed from its
  // expansion in 1/(x + lambda).
  const double sw = switch_point(spec.pair);
  std::size_t count = 0;
  while (x + to_double(zs.at(count).lambda) < sw) ++count;
  double head = 0.0;
  if (count > 0)
    head = stieltjes_range(build_phi_head(spec.pair, ell, zs, count), xr, exponent, Rational(0), std::nullopt);

  std::vector<double> coeffs;
  if (o >= 1) {
    const int max_m = d + 1 + kExpansionTerms;
    const std::vector<double> delta = power_sum_deltas(spec.pair, max_m);
    const double beta = boost::math::beta(static_cast<double>(ell + 1), static_cast<double>(o));
    coeffs.assign(static_cast<std::size_t>(o + max_m) + 1, 0.0);
    for (int m = d + 1; m <= max_m; ++m)
      coeffs[static_cast<std::size_t>(o + m)] = beta * neg_binom(o, m) * delta[static_cast<std::size_t>(m)];
  } else {
    coeffs.assign(static_cast<std::size_t>(exponent + kExpansionTerms) + 1, 0.0);
    for (int i = 0; i <= kExpansionTerms; ++i)
      coeffs[static_cast<std::size_t>(exponent + i)] = neg_binom(exponent, i) * to_double(moment(rho, i));
  }
  const ZeroStream tail = ZeroStream::lattice(zs.first_index() + static_cast<long>(count), zs.shift(), zs.mult_poly());
  auto j_exact = [&](double lambda) {
    return stieltjes_range(rho, exact_rational(x + lambda), exponent, Rational(0), std::nullopt);
  };
  return head + sum_over_zeros(tail, x, j_exact, coeffs, sw).value;
}

double laplace_side(const RatioSpec& spec, int ell, double x, double tol) {
  const int p = spec.model.genus;
  if (ell < 1 || ell > p) throw DomainError("laplace_side needs 1 <= ell <= genus");
  return laplace_integral(spec, ell, p, x, tol);
}

double stieltjes_side(const RatioSpec& spec, int ell, double x, double tol) {
  const int p = spec.model.genus;
  if (ell < 1 || ell > p) throw DomainError("stieltjes_side needs 1 <= ell <= genus");
  return factorial(p) / factorial(ell) * phi_stieltjes_integral(spec, ell, p + 1, x, tol);
}

void finalize_report(VerificationReport& r) {
  r.abs_deviation.clear();
  r.rel_deviation.clear();
  if (r.status == "not_applicable") {
    r.pass = false;
    return;
  }
  bool ok = !r.columns.empty();
  const auto& ref = r.columns.front().values;
  for (std::size_t c = 1; c < r.columns.size(); ++c) {
    ReportColumn ad{r.columns[c].name, {}};
    ReportColumn rd{r.columns[c].name, {}};
    for (std::size_t i = 0; i < ref.size(); ++i) {
      const double diff = std::abs(r.columns[c].values[i] - ref[i]);
      const double rel = ref[i] != 0.0 ? diff / std::abs(ref[i]) : diff;
      ad.values.push_back(diff);
      rd.values.push_back(rel);
      if (!(rel <= r.tolerance)) ok = false;
    }
    r.abs_deviation.push_back(std::move(ad));
    r.rel_deviation.push_back(std::move(rd));
  }
  r.pass = ok;
  r.status = ok ? "pass" : "fail";
}

namespace {

std::vector<std::string> strings(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

// Expansion of d^o log W summed zero by zero: sum_k sum_m c_m (x + lambda_k)^-(o+m).
double expansion_sum(const RatioSpec& spec, int order, double x) {
  const int d = pte_degree(spec.pair);
  const std::vector<double> coeffs = zero_series_coeffs(spec.pair, order, d);
  auto head = [&](double lambda) {
    const double y = x + lambda;
    double sum = 0.0;
    for (std::size_t e = 0; e < coeffs.size(); ++e)
      if (coeffs[e] != 0.0) sum += coeffs[e] * std::pow(y, -static_cast<double>(e));
    return sum;
  };
  return sum_over_zeros(spec.model.zeros, x, head, coeffs, switch_point(spec.pair)).value;
}

}  // namespace

VerificationReport verify_identity(const RatioSpec& spec, IdentityId id, int param, const std::vector<double>& grid,
                                   double tol) {
  VerificationReport r;
  r.model = spec.model.name;
  r.a = strings(spec.pair.a());
  r.b = strings(spec.pair.b());
  r.tolerance = tol;
  r.grid = grid;
  const int p = spec.model.genus;
  const int d = pte_degree(spec.pair);
  auto not_applicable = [&](const std::string& why) {
    r.status = "not_applicable";
    r.pass = false;
    r.notes.push_back(why);
    return r;
  };

  r.ell = (id == IdentityId::thm3 || id == IdentityId::prop25 || id == IdentityId::lemma24) ? param : 1;
  int order = 0;
  int j = 1;
  int power = 0;
  switch (id) {
    case IdentityId::thm1:
      r.identity = "thm1";
      order = p;
      j = 1;
      power = p + 1;
      break;
    case IdentityId::thm2:
      r.identity = "thm2";
      if (p < 1) return not_applicable("needs genus >= 1");
      if (d < 1) return not_applicable("needs sum a_k = sum b_k");
      order = p - 1;
      power = p;
      break;
    case IdentityId::thm3:
      r.identity = "thm3(" + std::to_string(param) + ")";
      if (param < 1 || param > p) return not_applicable("needs 1 <= ell <= genus");
      if (d < param) return not_applicable("needs equal power sums up to degree ell");
      order = p - param;
      j = param;
      power = p;
      break;
    case IdentityId::cor_barnes:
      r.identity = "cor_barnes(" + std::to_string(param) + ")";
      if (spec.model.kind != ModelKind::multiple_gamma || spec.model.genus != param)
        return not_applicable("needs the model multiple_gamma:" + std::to_string(param));
      if (d < 1) return not_applicable("needs sum a_k = sum b_k");
      order = param - 1;
      power = param;
      r.notes.push_back("direct column is (-1)^N d^(N-1) log W; the sign (-1)^(N-1) gives its negative");
      break;
    case IdentityId::prop25: {
      r.identity = "prop25(" + std::to_string(param) + ")";
      if (p < 1) return not_applicable("needs genus >= 1");
      if (param < 0) return not_applicable("needs ell >= 0");
      const int ell = std::min(param, p);
      if (ell != param) r.notes.push_back("ell clamped to the genus: " + std::to_string(ell));
      if (d < ell) return not_applicable("needs equal power sums up to degree ell");
      const MergedShiftResult ms = merged_shift_supermajorisation(spec.pair, spec.model, 60);
      if (ms.verdict == Verdict::fail) return not_applicable("merged-shift weak supermajorisation fails");
      r.notes.push_back(std::string("merged-shift check: ") + to_string(ms.verdict));
      order = p - ell;
      power = order + 1;
      r.ell = ell;
      break;
    }
    case IdentityId::lemma24: {
      r.identity = "lemma24(" + std::to_string(param) + ")";
      if (param < 0 || param > p) return not_applicable("needs 0 <= ell <= genus");
      if (d < param) return not_applicable("needs equal power sums up to degree ell");
      const double c = to_double(spec.pair.max_entry());
      for (double x : grid)
        if (x < 2.0 * c) return not_applicable("expansion needs x >= 2 max(a_n, b_n) = " + fmt(2.0 * c));
      try {
        ReportColumn direct{"direct", {}};
        ReportColumn expansion{"expansion", {}};
        for (double x : grid) {
          direct.values.push_back(dlogW_direct(spec, p - param, x, tol, DirectMethod::series));
          expansion.values.push_back(expansion_sum(spec, p - param, x));
        }
        r.columns = {direct, expansion};
        // Uniform bound on the inner sums over m.
        const int n = static_cast<int>(spec.pair.size());
        const std::vector<double> delta = power_sum_deltas(spec.pair, param + 1 + kExpansionTerms);
        auto cm = [&](int m) {
          if (param < p) return neg_binom(p - param, m);
          return ((m % 2 == 1) ? 1.0 : -1.0) / m;
        };
        double bound_sum = 0.0;
        for (int m = param + 1; m <= param + 1 + kExpansionTerms; ++m) bound_sum += std::abs(cm(m)) * std::pow(2.0, param + 1 - m);
        const double bound = 2.0 * n * std::pow(c, param + 1) * bound_sum;
        double worst = 0.0;
        if (!spec.pair.identical())
          for (double x : grid)
            for (std::size_t k = 0; k < 200 && spec.model.zeros.has(k); ++k) {
              const double y = x + to_double(spec.model.zeros.at(k).lambda);
              double inner = 0.0;
              for (int m = param + 1; m <= param + 1 + kExpansionTerms; ++m)
                inner += cm(m) * delta[static_cast<std::size_t>(m)] * std::pow(y, param + 1 - m);
              worst = std::max(worst, std::abs(inner));
            }
        r.notes.push_back("inner sums: max " + fmt(worst) + " <= bound " + fmt(bound) +
                          (worst <= bound ? " (holds)" : " (violated)"));
      } catch (const DomainError& e) {
        return not_applicable(e.what());
      }
      finalize_report(r);
      return r;
    }
  }

  const int sign = ((order + 1) % 2 == 0) ? 1 : -1;
  const double constant = factorial(power) / factorial(j);
  try {
    ReportColumn direct{"direct", {}};
    ReportColumn laplace{"laplace", {}};
    ReportColumn stieltjes{"stieltjes", {}};
    std::vector<double> raw;
    for (double x : grid) {
      direct.values.push_back(sign * dlogW_direct(spec, order, x, tol));
      laplace.values.push_back(laplace_integral(spec, j, power, x, tol));
      raw.push_back(phi_stieltjes_integral(spec, j, power + 1, x, tol));
      stieltjes.values.push_back(constant * raw.back());
    }
    r.columns = {direct, laplace, stieltjes};
    r.positive_on_grid = std::all_of(direct.values.begin(), direct.values.end(), [](double v) { return v > 0; });

    if (id == IdentityId::thm3 && !spec.pair.identical()) {
      std::vector<double> ratio;
      for (std::size_t i = 0; i < grid.size(); ++i) ratio.push_back(direct.values[i] / raw[i]);
      const bool constant_ratio = std::all_of(ratio.begin(), ratio.end(), [&](double v) {
        return std::abs(v - ratio.front()) <= 1e-6 * std::abs(ratio.front());
      });
      if (constant_ratio) {
        r.resolved_constant = ratio.front();
        const double proof = factorial(p) / factorial(param);
        const double display = factorial(p + 1);
        std::string which = "neither candidate";
        if (std::abs(ratio.front() - proof) <= 1e-6 * proof) which = "Gamma(p+1)/ell! = " + fmt(proof);
        else if (std::abs(ratio.front() - display) <= 1e-6 * display) which = "Gamma(p+2) = " + fmt(display);
        r.notes.push_back("resolved constant matches " + which);
      } else {
        r.notes.push_back("direct / raw Stieltjes ratio is not constant on the grid");
      }
    }

    // Sign hypothesis for the density.
    if (id == IdentityId::prop25) {
      const PiecewisePolynomial phi = build_phi(spec.pair, 1, spec.model.zeros, Rational(60));
      r.density_nonnegative = certify_nonnegative(phi).nonnegative;
      r.notes.push_back("phi checked exactly on [0, 60]");
    } else if (!spec.pair.identical()) {
      r.density_nonnegative = certify_nonnegative(build_rho(spec.pair, j)).nonnegative;
    } else {
      r.density_nonnegative = true;
    }
  } catch (const DomainError& e) {
    return not_applicable(e.what());
  }
  finalize_report(r);
  return r;
}

std::string to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["identity"] = r.identity;
  j["model"] = r.model;
  j["a"] = r.a;
  j["b"] = r.b;
  j["ell"] = r.ell;
  j["status"] = r.status;
  j["pass"] = r.pass;
  j["tolerance"] = r.tolerance;
  j["grid"] = r.grid;
  auto columns = [](const std::vector<ReportColumn>& cols) {
    nlohmann::ordered_json o = nlohmann::ordered_json::object();
    for (const auto& c : cols) o[c.name] = c.values;
    return o;
  };
  j["columns"] = columns(r.columns);
  j["abs_deviation"] = columns(r.abs_deviation);
  j["rel_deviation"] = columns(r.rel_deviation);
  j["resolved_constant"] = r.resolved_constant ? nlohmann::ordered_json(*r.resolved_constant) : nullptr;
  j["positive_on_grid"] = r.positive_on_grid ? nlohmann::ordered_json(*r.positive_on_grid) : nullptr;
  j["density_nonnegative"] = r.density_nonnegative ? nlohmann::ordered_json(*r.density_nonnegative) : nullptr;
  j["notes"] = r.notes;
  return j.dump(2);
}

CmReport cm_test(const std::function<double(double)>& fn, int max_order, const std::vector<double>& grid,
                 double step, double tol) {
  CmReport out{true, max_order, step, std::nullopt};
  for (double x : grid) {
    std::vector<double> f;
    for (int i = 0; i <= max_order; ++i) f.push_back(fn(x + i * step));
    for (int k = 0; k <= max_order; ++k) {
      // Delta^k f(x) = sum_i (-1)^(k-i) C(k,i) f(x + i h); times (-1)^k gives sum_i (-1)^i C(k,i) f_i.
      double value = 0.0;
      double scale = 0.0;
      double binom = 1.0;
      for (int i = 0; i <= k; ++i) {
        value += ((i % 2 == 0) ? 1.0 : -1.0) * binom * f[static_cast<std::size_t>(i)];
        scale = std::max(scale, std::abs(f[static_cast<std::size_t>(i)]));
        binom = binom * (k - i) / (i + 1);
      }
      if (value < -tol * scale) {
        out.pass = false;
        out.first_violation = CmViolation{x, k, value};
        return out;
      }
    }
  }
  return out;
}

}  // namespace gstieltjes
