#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <sstream>

#include "gstieltjes/catalog.hpp"
#include "gstieltjes/errors.hpp"
#include "gstieltjes/piecewise.hpp"

using namespace gstieltjes;

namespace {

SequencePair pair_of(const char* a, const char* b) { return SequencePair(parse_rational_list(a), parse_rational_list(b)); }

// Composite Simpson on [lo, hi] with n (even) panels; the breakpoints used below are on the mesh.
double simpson(const std::function<double(double)>& f, double lo, double hi, int n) {
  const double h = (hi - lo) / n;
  double s = f(lo) + f(hi);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(lo + i * h);
  return s * h / 3.0;
}

}  // namespace

TEST_CASE("rho values by hand") {
  const auto rho1 = build_rho(pair_of("0,4,5", "1,2,6"), 1);
  CHECK(rho1(Rational(9, 2)) == -1);
  CHECK(rho1(Rational(1)) == 1);
  CHECK(rho1(Rational(-1)) == 0);
  CHECK(rho1(Rational(7)) == 0);
  const auto rho2 = build_rho(pair_of("0,4,5", "1,2,6"), 2);
  // t^2 - (t-1)^2 - (t-2)^2 at t = 3
  CHECK(rho2(Rational(3)) == 9 - 4 - 1);
  CHECK(rho2.degree() == 2);
  CHECK(rho2.is_continuous());
  CHECK(rho1.evaluate(4.5) == -1.0);
}

TEST_CASE("rho pair (0,4,5)/(1,2,6): exact sign certificates") {
  const SequencePair p = pair_of("0,4,5", "1,2,6");
  const auto c2 = certify_nonnegative(build_rho(p, 2));
  CHECK(c2.nonnegative);
  CHECK_FALSE(c2.witness.has_value());
  const auto c1 = certify_nonnegative(build_rho(p, 1));
  CHECK_FALSE(c1.nonnegative);
  REQUIRE(c1.witness.has_value());
  CHECK(c1.witness_value < 0);
  CHECK(build_rho(p, 1)(*c1.witness) == c1.witness_value);
  const auto rho2 = build_rho(p, 2);
  REQUIRE(rho2.support_end().has_value());
  CHECK(*rho2.support_end() == 6);
  for (int t : {6, 7, 50, 1000}) CHECK(rho2(Rational(t)) == 0);
  // pte degree 2 gives compact support for ell <= 2 only
  CHECK_FALSE(build_rho(p, 3).support_end().has_value());
}

TEST_CASE("support ends exactly when power sums agree") {
  CHECK(build_rho(pair_of("0,3", "1,2"), 1).support_end().has_value());
  CHECK_FALSE(build_rho(pair_of("0,3", "1,2"), 2).support_end().has_value());
  CHECK_FALSE(build_rho(pair_of("0,4", "1,2"), 1).support_end().has_value());
}

TEST_CASE("degenerate inputs") {
  CHECK(build_rho(pair_of("1,2", "1,2"), 1).is_zero());
  CHECK_THROWS_AS(build_rho(pair_of("0,3", "1,2"), 0), DomainError);
}

TEST_CASE("derivative of rho_k is k rho_(k-1)") {
  const SequencePair p = pair_of("0,4,5", "1,2,6");
  const auto d = build_rho(p, 3).derivative();
  const auto r2 = build_rho(p, 2);
  for (int i = -4; i <= 30; ++i) {
    const Rational t(i, 4);
    CHECK(d(t) == 3 * r2(t));
  }
}

TEST_CASE("monotonicity changes of rho_1") {
  // slope +1 on (0,1), 0, -1 on (2,4), 0, +1 on (5,6)
  CHECK(monotonicity_changes(build_rho(pair_of("0,4,5", "1,2,6"), 1)) == 2);
  CHECK(monotonicity_changes(build_rho(pair_of("0,3", "1,2"), 1)) == 1);
}

TEST_CASE("integrals against a Simpson oracle") {
  const auto rho = build_rho(pair_of("0,4,5", "1,2,6"), 2);
  auto f = [&](double t) { return rho.evaluate(t); };
  for (int i = 0; i <= 3; ++i) {
    const double numeric = simpson([&](double t) { return std::pow(t, i) * f(t); }, 0.0, 6.0, 6000);
    CHECK(to_double(moment(rho, i)) == doctest::Approx(numeric).epsilon(1e-10));
  }
  for (double s : {0.3, 1.0, 3.0}) {
    const double numeric = simpson([&](double t) { return std::exp(-s * t) * f(t); }, 0.0, 6.0, 6000);
    CHECK(laplace_transform(rho, s) == doctest::Approx(numeric).epsilon(1e-10));
  }
  for (int order : {1, 2, 4}) {
    const double numeric = simpson([&](double t) { return f(t) / std::pow(1.5 + t, order); }, 0.0, 6.0, 6000);
    CHECK(stieltjes_range(rho, Rational(3, 2), order, Rational(0), std::nullopt) ==
          doctest::Approx(numeric).epsilon(1e-10));
  }
}

TEST_CASE("Stieltjes integral of a non-compact density") {
  // rho_1 for (0,4)/(1,2): t, 1, 3 - t, then the constant -1 from t = 4 on
  const auto rho = build_rho(pair_of("0,4", "1,2"), 1);
  const double exact = 11.0 / 60.0;  // piecewise closed form
  CHECK(stieltjes_range(rho, Rational(1), 3, Rational(0), std::nullopt) == doctest::Approx(exact).epsilon(1e-13));
  const auto r = stieltjes_integral(rho, 1.0, 3, Rational(8));
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(exact).epsilon(1e-9));
  CHECK_THROWS_AS(stieltjes_range(rho, Rational(1), 1, Rational(0), std::nullopt), DomainError);
}

TEST_CASE("phi sums shifted copies of rho") {
  const auto model = parse_model("reciprocal_gamma");
  const auto phi = build_phi(pair_of("0,3", "1,2"), 1, model.zeros, Rational(20));
  CHECK(phi(Rational(1, 2)) == Rational(1, 2));
  CHECK(phi(Rational(2)) == 2);
  CHECK(phi(Rational(10)) == 2);
  CHECK(phi(Rational(21, 2)) == 2);
  CHECK_THROWS_AS(phi(Rational(21)), DomainError);
  CHECK(certify_nonnegative(phi).nonnegative);
}

TEST_CASE("phi for the shifted gamma with a reordered pair is non-negative") {
  const auto model = parse_model("reciprocal_gamma_shifted");
  const auto phi = build_phi(pair_of("0,3,3", "1,1,4"), 1, model.zeros, Rational(60));
  CHECK(certify_nonnegative(phi).nonnegative);
  // rho_1 alone is negative on (3, 4)
  CHECK_FALSE(certify_nonnegative(build_rho(pair_of("0,3,3", "1,1,4"), 1)).nonnegative);
}

TEST_CASE("CSV samples are byte-stable") {
  const auto rho1 = build_rho(pair_of("0,4,5", "1,2,6"), 1);
  const auto rho2 = build_rho(pair_of("0,4,5", "1,2,6"), 2);
  std::ostringstream a, b;
  write_samples_csv(a, {"rho1", "rho2"}, {&rho1, &rho2}, Rational(-1), Rational(7), Rational(1, 10));
  write_samples_csv(b, {"rho1", "rho2"}, {&rho1, &rho2}, Rational(-1), Rational(7), Rational(1, 10));
  CHECK(a.str() == b.str());
  const std::string s = a.str();
  CHECK(s.rfind("t,rho1,rho2\n-1,0,0\n", 0) == 0);
  CHECK(s.find('\r') == std::string::npos);
  CHECK(s.find("\n4.5,-1,") != std::string::npos);
  CHECK(std::count(s.begin(), s.end(), '\n') == 82);
}
