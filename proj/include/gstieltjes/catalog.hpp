#pragma once

#include <array>
#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gstieltjes/sequences.hpp"
#include "gstieltjes/zero_stream.hpp"

namespace gstieltjes {

enum class ModelKind {
  reciprocal_gamma,          // 1/Gamma(z)
  reciprocal_gamma_shifted,  // 1/Gamma(z+1)
  barnes_g_shifted,          // G(z+1)
  barnes_g,                  // G(z)
  multiple_gamma,            // 1/Gamma_N(z)
  finite_zeros,
  custom,
};

/// An entire function of genus p with zeros at -lambda_k, described by its zero stream.
struct EntireModel {
  std::string name;
  ModelKind kind = ModelKind::custom;
  int genus = 0;
  ZeroStream zeros;
  /// h(s) in closed form, when known.
  std::function<double(double)> closed_h;
  /// (order, x) -> d^order/dx^order log f(x) for x > 0, when known.
  std::function<double(int, double)> direct_oracle;
  /// w -> log|f(w)|, when known.
  std::function<double(std::complex<double>)> log_modulus;
  /// Lower bound on the eventual gap between consecutive lambdas (used in tail bounds).
  double tail_gap = 1.0;
};

EntireModel make_model(ModelKind kind, int N = 0);
/// Genus-zero model with the given zeros (lambda >= 0).
EntireModel make_finite_zeros_model(std::vector<Zero> zeros, int genus = 0);
/// JSON: {"genus": p, "zeros": [[lambda, mult], ...], "complete": true} or
/// {"genus": p, "rule": "lambda=k+c, mult=expr(k)", "start": k0, "tail_gap": d}.
EntireModel make_custom_model(std::string_view json_text);
/// "reciprocal_gamma", "reciprocal_gamma_shifted", "barnes_g", "barnes_g_shifted",
/// "multiple_gamma:N", "finite_zeros:l1,l2,..." (repeats give multiplicity), "custom:<file>".
EntireModel parse_model(std::string_view text);

/// Polynomial in k from an expression using + - * / ^, parentheses, rationals and binom(expr, n).
Polynomial parse_k_polynomial(std::string_view text);

std::vector<Zero> zeros_up_to(const EntireModel& model, const Rational& T);

/// Partial sums of mult * lambda^(-p-1) over 0 < lambda <= T for T = 1e2, 1e3, 1e4.
struct GenusCheck {
  std::array<double, 3> partial_sums;
  bool increasing;
  bool bounded;  // heuristic: the last increment is below half the previous one
};
GenusCheck genus_sanity(const EntireModel& model);

enum class Verdict { pass, fail, inconclusive };
const char* to_string(Verdict v);

struct MergedShiftResult {
  Verdict verdict;
  /// trace[m-1] = sum_{k<=m} mu_b,k - sum_{k<=m} mu_a,k
  std::vector<Rational> trace;
  bool eventually_stationary;
  std::vector<Rational> merged_a;
  std::vector<Rational> merged_b;
};

/// Checks sum_{k<=m} mu_a,k <= sum_{k<=m} mu_b,k for m <= depth, where mu_a is the sorted
/// multiset {lambda + a_j} over the zeros. Multiplicities must be integers.
MergedShiftResult merged_shift_supermajorisation(const SequencePair& pair, const EntireModel& model, int depth);

}  // namespace gstieltjes
