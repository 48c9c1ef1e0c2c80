#pragma once

#include <optional>
#include <vector>

#include "gstieltjes/catalog.hpp"
#include "gstieltjes/sequences.hpp"

namespace gstieltjes {

/// g_ell(s) = (sum e^{-s a_k} - sum e^{-s b_k}) / s^{1+ell}, with its Taylor expansion in the
/// exact power sum differences for small c*s (c = max entry), where the direct formula cancels.
class GKernel {
 public:
  GKernel(const SequencePair& pair, int ell);
  /// s >= 0. At s = 0 returns the limit when pte_degree >= ell, else throws DomainError.
  double operator()(double s) const;
  int ell() const { return ell_; }
  int pte() const { return pte_; }

 private:
  std::vector<double> a_;
  std::vector<double> b_;
  std::vector<double> delta_;  // Delta_m / m!
  int ell_;
  int pte_;
  double c_;
};

double g_ell(const SequencePair& pair, int ell, double s);

enum class KernelKind { h, xi };

struct KernelEval {
  double value;
  double trunc_error_bound;
  long terms_used;
  std::optional<double> closed_form;  // closed_h(s) when the model has one (kind h)
};

/// Partial sums of h(s) = sum mult e^{-lambda s} or xi(s) = sum mult e^{-lambda^2 s}, stopped by
/// a ratio-test tail bound. Throws BudgetError (with the best value) past max_terms.
KernelEval kernel_series(const EntireModel& model, KernelKind kind, double s, double tol,
                         long max_terms = 20'000'000);

/// Fast evaluator of h or xi for quadrature: closed forms for lattices in lambda, partial sums
/// or Euler-Maclaurin for lattices in lambda^2, direct sums for finite streams.
class KernelFunction {
 public:
  KernelFunction(const EntireModel& model, KernelKind kind);
  double operator()(double s) const;
  /// r with kernel(s) ~ C s^-r as s -> 0.
  double singularity_order() const { return singularity_; }

 private:
  double xi_lattice(double s) const;
  KernelKind kind_;
  ZeroStream zeros_;
  std::vector<double> finite_lambda_;
  std::vector<double> finite_mult_;
  // h on a lattice: e^{-offset s} sum_i beta_i (1 - e^{-s})^{-i-1}
  double offset_ = 0.0;
  std::vector<double> beta_;
  // xi on a lattice: Q(u) = mult at u = k + shift
  std::vector<double> q_;
  double u0_ = 0.0;
  double singularity_ = 0.0;
};

struct LaplaceRhoCheck {
  double lhs;
  double rhs;
  double abs_diff;
};

/// g_ell(s) against (1/ell!) int_0^inf e^{-st} rho_ell(t) dt.
LaplaceRhoCheck laplace_rho_identity(const SequencePair& pair, int ell, double s);

}  // namespace gstieltjes
