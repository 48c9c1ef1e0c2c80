#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gstieltjes/catalog.hpp"
#include "gstieltjes/sequences.hpp"

namespace gstieltjes {

struct RatioSpec {
  EntireModel model;
  SequencePair pair;
};

enum class DirectMethod {
  automatic,  // the model's oracle when present, else the zero series
  series,
  oracle,
};

/// d^order/dx^order log W_f(x) with W_f = prod f(x + a_k) / prod f(x + b_k).
/// For infinite zero streams requires order + pte_degree >= genus.
double dlogW_direct(const RatioSpec& spec, int order, double x, double tol,
                    DirectMethod method = DirectMethod::automatic);

/// int_0^inf e^{-sx} s^power h(s) g_ell(s) ds.
double laplace_integral(const RatioSpec& spec, int ell, int power, double x, double tol);

/// int_0^inf phi_ell(t) / (x + t)^exponent dt, with phi_ell = sum mult rho_ell(t - lambda).
double phi_stieltjes_integral(const RatioSpec& spec, int ell, int exponent, double x, double tol);

/// Laplace side of the order-(p+1) representation: int e^{-sx} s^p h(s) g_ell(s) ds.
double laplace_side(const RatioSpec& spec, int ell, double x, double tol);

/// Stieltjes side of the same: Gamma(p+1)/ell! int phi_ell(t)/(x+t)^{p+1} dt. Needs 1 <= ell <= p.
double stieltjes_side(const RatioSpec& spec, int ell, double x, double tol);

enum class IdentityId { thm1, thm2, thm3, cor_barnes, prop25, lemma24 };

struct ReportColumn {
  std::string name;
  std::vector<double> values;
};

struct VerificationReport {
  std::string identity;
  std::string model;
  std::vector<std::string> a;
  std::vector<std::string> b;
  int ell = 0;
  std::string status;  // "pass", "fail" or "not_applicable"
  bool pass = false;
  double tolerance = 0.0;
  std::vector<double> grid;
  /// The first column is the reference; deviations are measured against it.
  std::vector<ReportColumn> columns;
  std::vector<ReportColumn> abs_deviation;
  std::vector<ReportColumn> rel_deviation;
  std::optional<double> resolved_constant;
  std::optional<bool> positive_on_grid;
  std::optional<bool> density_nonnegative;
  std::vector<std::string> notes;
};

/// Fills deviations, pass flag and status from the columns.
void finalize_report(VerificationReport& report);

/// `param` is ell for thm3, prop25 and lemma24, and N for cor_barnes (ignored otherwise).
/// Unmet preconditions give status "not_applicable" with the reason in notes.
VerificationReport verify_identity(const RatioSpec& spec, IdentityId id, int param, const std::vector<double>& grid,
                                   double tol);

/// JSON with stable field order and "schema": 1.
std::string to_json(const VerificationReport& report);

struct CmViolation {
  double x;
  int order;
  double value;  // (-1)^order times the forward difference
};

struct CmReport {
  bool pass;
  int max_order;
  double step;
  std::optional<CmViolation> first_violation;
};

/// (-1)^k Delta_step^k fn(x) >= -tol * scale for k <= max_order and x in grid, where scale is
/// the largest |fn| on the stencil.
CmReport cm_test(const std::function<double(double)>& fn, int max_order, const std::vector<double>& grid,
                 double step, double tol);

}  // namespace gstieltjes
