#pragma once

#include <functional>

namespace gstieltjes {

struct QuadratureResult {
  double value;
  double error;
  int panels;
};

/// int_0^inf f(s) ds for f with an integrable power singularity at 0 and exponential decay.
/// Dyadic panels [2^-j-1, 2^-j] toward 0 and [2^j, 2^j+1] toward infinity, each integrated by
/// adaptive Gauss-Kronrod (7/15), until the panels stop contributing at relative level tol.
QuadratureResult integrate_half_line(const std::function<double(double)>& f, double tol);

}  // namespace gstieltjes
