#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gstieltjes/catalog.hpp"
#include "gstieltjes/representations.hpp"
#include "gstieltjes/sequences.hpp"
#include "gstieltjes/zero_stream.hpp"

namespace gstieltjes {

/// log|f| along vertical lines through the stream of squared zeros (zeros of kappa).
struct VerticalModel {
  EntireModel base;
  int m = 0;  // floor(p / 2)
  ZeroStream squared_zeros;
};

VerticalModel make_vertical(EntireModel base);

/// Finite model with zeros at -lambda for lambda of either sign.
EntireModel make_signed_zeros_model(std::vector<Zero> zeros, int genus = 0);

/// (m!/2) sum_k mult_k / (x + (a + lambda_k)^2)^(m+1), i.e. (-1)^m d^(m+1)/dx^(m+1) log|f(a + i sqrt(x))|.
double vertical_derivative_rep(const VerticalModel& vm, double a, double x, double tol);

/// (-1)^m d^n/dx^n log|f(a + i sqrt(x))| by central differences with two-level Richardson
/// extrapolation, step max(1e-3, 1e-4 x). Needs base.log_modulus.
double modulus_derivative(const VerticalModel& vm, double a, int n, double x);

/// Density of mu * m_a, i.e. sum_k mult_k 1_{(lambda_k^2, lambda_k^2 + a)}(t).
class ConvolutionDensity {
 public:
  ConvolutionDensity(const VerticalModel& vm, double a);
  double operator()(double t) const;
  /// int_0^inf density(t) / (x + t)^order dt, piece by piece in closed form.
  double stieltjes(double x, int order) const;

 private:
  ZeroStream zeros_;
  double a_;
};

ConvolutionDensity convolution_density(const VerticalModel& vm, double a);

enum class VerticalId { prop31, cor32, cor33, prop34, cor35 };

struct VerticalQuery {
  VerticalId id = VerticalId::prop31;
  double a = 0.0;     // cor32, cor33
  std::optional<SequencePair> pair;  // prop34, cor35
};

VerificationReport verify_vertical(const VerticalModel& vm, const VerticalQuery& query, const std::vector<double>& grid,
                                   double tol);

}  // namespace gstieltjes
