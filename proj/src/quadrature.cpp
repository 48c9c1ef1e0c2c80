#include "gstieltjes/quadrature.hpp"

#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gstieltjes/errors.hpp"

namespace gstieltjes {

namespace {

struct Panel {
  double value;
  double error;
  double l1;
};

Panel panel(const std::function<double(double)>& f, double a, double b, double tol) {
  double error = 0.0;
  double l1 = 0.0;
  // Boost compares the error on the unit interval against a tolerance scaled by the panel
  // width, so each panel is mapped onto [0, 1] first.
  const double w = b - a;
  auto unit = [&](double u) { return w * f(a + w * u); };
  const double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(unit, 0.0, 1.0, 15, tol, &error, &l1);
  if (!std::isfinite(v)) throw DomainError("integrand is not finite on the integration range");
  return {v, error, l1};
}

}  // namespace

QuadratureResult integrate_half_line(const std::function<double(double)>& f, double tol) {
  const double panel_tol = std::max(tol * 1e-3, 1e-13);
  QuadratureResult out{0.0, 0.0, 0};
  double l1_total = 0.0;

  // Toward infinity.
  int quiet = 0;
  for (int j = 1; j < 1024; ++j) {
    const double a = std::ldexp(1.0, j - 1);
    const double b = std::ldexp(1.0, j);
    Panel p = panel(f, a, b, panel_tol);
    out.value += p.value;
    out.error += p.error;
    l1_total += p.l1;
    ++out.panels;
    quiet = (p.l1 <= 1e-18 * l1_total) ? quiet + 1 : 0;
    if (quiet >= 3) break;
    if (j == 1023) throw BudgetError("integrand does not decay", out.value, INFINITY);
  }

  // Toward zero.
  quiet = 0;
  double lo = 1.0;
  const int max_panels = 1000;
  for (int j = 0; j < max_panels; ++j) {
    const double a = lo / 2.0;
    Panel p = panel(f, a, lo, panel_tol);
    out.value += p.value;
    out.error += p.error;
    l1_total += p.l1;
    ++out.panels;
    lo = a;
    quiet = (p.l1 <= 1e-18 * l1_total) ? quiet + 1 : 0;
    if (quiet >= 3) break;
    if (j == max_panels - 1) throw BudgetError("integrand is not integrable at 0 to the requested tolerance", out.value, p.l1);
  }
  Panel last = panel(f, 0.0, lo, panel_tol);
  out.value += last.value;
  out.error += last.error + std::abs(last.value);
  ++out.panels;
  return out;
}

}  // namespace gstieltjes
