#include "gstieltjes/vertical.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/special_functions/factorials.hpp>

#include "gstieltjes/errors.hpp"
#include "gstieltjes/kernels.hpp"
#include "gstieltjes/quadrature.hpp"
#include "gstieltjes/series.hpp"

namespace gstieltjes {

namespace {

constexpr int kExpansionTerms = 60;

double factorial(int n) { return boost::math::factorial<double>(static_cast<unsigned>(n)); }

double neg_binom(int o, int m) {
  double b = 1.0;
  for (int i = 0; i < m; ++i) b *= static_cast<double>(o + i) / static_cast<double>(i + 1);
  return (m % 2 == 0) ? b : -b;
}

// (lambda + a)^2 as one or two streams: a finite part for the lattice points with
// lambda + a < 0 and a squared lattice for the rest.
std::vector<ZeroStream> shifted_squared(const ZeroStream& zs, const Rational& a) {
  if (zs.is_finite()) {
    if (!zs.complete()) throw DomainError("insufficient zeros");
    std::vector<Zero> out;
    for (std::size_t i = 0; i < zs.size(); ++i) {
      const Zero z = zs.at(i);
      const Rational u = z.lambda + a;
      out.push_back({u * u, z.mult});
    }
    return {ZeroStream::finite(std::move(out))};
  }
  if (zs.exponent() != 1) throw DomainError("stream is already squared");
  const Rational shift = zs.shift() + a;
  long k0 = zs.first_index();
  std::vector<Zero> head;
  for (; Rational(k0) + shift < 0; ++k0) {
    const Rational u = Rational(k0) + shift;
    head.push_back({u * u, zs.mult_poly()(Rational(k0))});
  }
  std::vector<ZeroStream> parts{ZeroStream::lattice(k0, shift, zs.mult_poly(), 2)};
  if (!head.empty()) parts.push_back(ZeroStream::finite(std::move(head)));
  return parts;
}

double central_difference(const std::function<double(double)>& f, int n, double x, double h) {
  double sum = 0.0;
  double binom = 1.0;
  for (int i = 0; i <= n; ++i) {
    sum += ((i % 2 == 0) ? 1.0 : -1.0) * binom * f(x + (0.5 * n - i) * h);
    binom = binom * (n - i) / (i + 1);
  }
  return sum / std::pow(h, n);
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

}  // namespace

VerticalModel make_vertical(EntireModel base) {
  VerticalModel vm;
  vm.m = base.genus / 2;
  const std::vector<ZeroStream> parts = shifted_squared(base.zeros, Rational(0));
  if (parts.size() != 1) throw DomainError("lattice zeros on both sides of the origin are not supported");
  vm.squared_zeros = parts.front();
  vm.base = std::move(base);
  return vm;
}

EntireModel make_signed_zeros_model(std::vector<Zero> zeros, int genus) {
  if (genus < 0) throw DomainError("genus must be >= 0");
  EntireModel m;
  m.kind = ModelKind::custom;
  m.genus = genus;
  m.zeros = ZeroStream::finite(std::move(zeros));
  m.name = "signed_zeros";
  std::vector<Zero> list;
  for (std::size_t i = 0; i < m.zeros.size(); ++i) list.push_back(m.zeros.at(i));
  m.log_modulus = [list](std::complex<double> w) {
    double sum = 0.0;
    for (const auto& z : list) sum += to_double(z.mult) * std::log(std::abs(w + to_double(z.lambda)));
    return sum;
  };
  return m;
}

double vertical_derivative_rep(const VerticalModel& vm, double a, double x, double tol) {
  (void)tol;
  if (!(x > 0)) throw DomainError("x must be positive");
  const int e = vm.m + 1;
  std::vector<double> coeffs(static_cast<std::size_t>(e) + 1, 0.0);
  coeffs[static_cast<std::size_t>(e)] = 1.0;
  auto head = [&](double mu) { return std::pow(x + mu, -e); };
  double sum = 0.0;
  for (const auto& part : shifted_squared(vm.base.zeros, exact_rational(a)))
    sum += sum_over_zeros(part, x, head, coeffs, 16.0).value;
  return 0.5 * factorial(vm.m) * sum;
}

double modulus_derivative(const VerticalModel& vm, double a, int n, double x) {
  if (!vm.base.log_modulus) throw DomainError("model " + vm.base.name + " has no modulus oracle");
  if (!(x > 0)) throw DomainError("x must be positive");
  auto f = [&](double t) { return vm.base.log_modulus(std::complex<double>(a, std::sqrt(t))); };
  const double sign = (vm.m % 2 == 0) ? 1.0 : -1.0;
  if (n == 0) return sign * f(x);
  double h = std::max(1e-3, 1e-4 * x);
  // keep the stencil inside x > 0
  if (x - 0.5 * n * h <= 0.0) h = x / (n + 1);
  const double d1 = central_difference(f, n, x, h);
  const double d2 = central_difference(f, n, x, 0.5 * h);
  return sign * (4.0 * d2 - d1) / 3.0;
}

ConvolutionDensity::ConvolutionDensity(const VerticalModel& vm, double a) : zeros_(vm.squared_zeros), a_(a) {
  if (!(a > 0)) throw DomainError("a must be positive");
}

double ConvolutionDensity::operator()(double t) const {
  double sum = 0.0;
  for (std::size_t i = 0; zeros_.has(i); ++i) {
    const Zero z = zeros_.at(i);
    const double mu = to_double(z.lambda);
    if (mu >= t) break;
    if (t < mu + a_) sum += to_double(z.mult);
  }
  return sum;
}

double ConvolutionDensity::stieltjes(double x, int order) const {
  if (!(x > 0)) throw DomainError("x must be positive");
  if (order < 1) throw DomainError("order must be >= 1");
  const double a = a_;
  auto head = [&](double mu) {
    const double y = x + mu;
    if (order == 1) return std::log1p(a / y);
    return (std::pow(y, 1 - order) - std::pow(y + a, 1 - order)) / (order - 1);
  };
  std::vector<double> coeffs(static_cast<std::size_t>(order + kExpansionTerms) + 1, 0.0);
  for (int n = 1; n <= kExpansionTerms; ++n) {
    const double an = std::pow(a, n);
    if (order == 1)
      coeffs[static_cast<std::size_t>(n)] = ((n % 2 == 1) ? 1.0 : -1.0) * an / n;
    else
      coeffs[static_cast<std::size_t>(order - 1 + n)] = -neg_binom(order - 1, n) * an / (order - 1);
  }
  return sum_over_zeros(zeros_, x, head, coeffs, std::max(16.0, 8.0 * a)).value;
}

ConvolutionDensity convolution_density(const VerticalModel& vm, double a) { return ConvolutionDensity(vm, a); }

VerificationReport verify_vertical(const VerticalModel& vm, const VerticalQuery& query, const std::vector<double>& grid,
                                   double tol) {
  VerificationReport r;
  r.model = vm.base.name;
  r.tolerance = tol;
  r.grid = grid;
  r.ell = vm.m;
  const int m = vm.m;
  auto not_applicable = [&](const std::string& why) {
    r.status = "not_applicable";
    r.pass = false;
    r.notes.push_back(why);
    return r;
  };
  try {
    switch (query.id) {
      case VerticalId::prop31:
      case VerticalId::cor32: {
        const double a = query.id == VerticalId::prop31 ? 0.0 : query.a;
        r.identity = query.id == VerticalId::prop31 ? "prop31" : "cor32(a=" + fmt(a) + ")";
        if (!vm.base.log_modulus) return not_applicable("model " + vm.base.name + " has no modulus oracle");
        ReportColumn direct{"direct", {}};
        ReportColumn series{"series", {}};
        for (double x : grid) {
          direct.values.push_back(modulus_derivative(vm, a, m + 1, x));
          series.values.push_back(vertical_derivative_rep(vm, a, x, tol));
        }
        r.positive_on_grid = std::all_of(series.values.begin(), series.values.end(), [](double v) { return v > 0; });
        r.columns = {direct, series};
        r.notes.push_back("direct column: Richardson central differences of log|f(a + i sqrt(x))|");
        break;
      }
      case VerticalId::cor33: {
        r.identity = "cor33(a=" + fmt(query.a) + ")";
        if (!(query.a > 0)) return not_applicable("needs a > 0");
        if (!vm.base.log_modulus) return not_applicable("model " + vm.base.name + " has no modulus oracle");
        const ConvolutionDensity density(vm, query.a);
        ReportColumn direct{"direct", {}};
        ReportColumn series{"series", {}};
        for (double x : grid) {
          direct.values.push_back(modulus_derivative(vm, 0.0, m, x + query.a) - modulus_derivative(vm, 0.0, m, x));
          series.values.push_back(0.5 * factorial(m) * density.stieltjes(x, m + 1));
        }
        r.positive_on_grid = std::all_of(series.values.begin(), series.values.end(), [](double v) { return v > 0; });
        r.columns = {direct, series};
        break;
      }
      case VerticalId::prop34:
      case VerticalId::cor35: {
        r.identity = query.id == VerticalId::prop34 ? "prop34" : "cor35";
        if (!query.pair) return not_applicable("needs a sequence pair");
        const SequencePair& pair = *query.pair;
        for (const auto& v : pair.a()) r.a.push_back(to_string(v));
        for (const auto& v : pair.b()) r.b.push_back(to_string(v));
        if (query.id == VerticalId::cor35 && vm.base.kind != ModelKind::barnes_g)
          return not_applicable("needs the model barnes_g");
        if (vm.base.genus < 2) return not_applicable("needs genus >= 2; genus one is covered by cor32");
        if (pte_degree(pair) < 1) return not_applicable("needs sum a_k = sum b_k");
        if (!is_weak_supermajorisation(pair)) return not_applicable("needs b weakly supermajorised by a");

        EntireModel kappa;
        kappa.name = "kappa(" + vm.base.name + ")";
        kappa.genus = m;
        kappa.zeros = vm.squared_zeros;
        const RatioSpec spec{kappa, pair};
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        const KernelFunction xi(vm.base, KernelKind::xi);
        const GKernel g(pair, 1);

        ReportColumn series{"kappa_series", {}};
        ReportColumn laplace{"laplace", {}};
        ReportColumn modulus{"modulus", {}};
        for (double x : grid) {
          series.values.push_back(0.5 * sign * dlogW_direct(spec, m - 1, x, tol, DirectMethod::series));
          double lap = 0.0;
          if (!pair.identical()) {
            auto f = [&](double s) { return std::exp(-s * x) * std::pow(s, m) * xi(s) * g(s); };
            lap = 0.5 * integrate_half_line(f, tol).value;
          }
          laplace.values.push_back(lap);
          if (vm.base.log_modulus) {
            double sum = 0.0;
            for (std::size_t k = 0; k < pair.size(); ++k)
              sum += modulus_derivative(vm, 0.0, m - 1, x + to_double(pair.a()[k])) -
                     modulus_derivative(vm, 0.0, m - 1, x + to_double(pair.b()[k]));
            modulus.values.push_back(sum);
          }
        }
        r.columns = {series, laplace};
        if (vm.base.log_modulus) r.columns.push_back(modulus);
        r.positive_on_grid = std::all_of(laplace.values.begin(), laplace.values.end(), [](double v) { return v >= 0; });
        r.notes.push_back("kappa_series: zero series of (1/2) log W_kappa over the squared zeros");
        break;
      }
    }
  } catch (const DomainError& e) {
    return not_applicable(e.what());
  }
  finalize_report(r);
  return r;
}

}  // namespace gstieltjes
