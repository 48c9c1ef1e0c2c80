#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gstieltjes/catalog.hpp"
#include "gstieltjes/errors.hpp"
#include "gstieltjes/series.hpp"
#include "gstieltjes/special.hpp"

using namespace gstieltjes;

namespace {

SequencePair pair_of(const char* a, const char* b) { return SequencePair(parse_rational_list(a), parse_rational_list(b)); }

}  // namespace

TEST_CASE("special functions against mpmath values") {
  CHECK(log_gamma(12.5) == doctest::Approx(18.734347511936445702).epsilon(1e-14));
  CHECK(polygamma(1, 2.5) == doctest::Approx(0.49035775610023486497).epsilon(1e-14));
  CHECK(polygamma(3, 0.7) == doctest::Approx(25.879149678427737993).epsilon(1e-13));
  CHECK(hurwitz_zeta(3, 1.5) == doctest::Approx(0.4143983221171599978).epsilon(1e-14));
  CHECK(hurwitz_zeta(30, 1.5) == doctest::Approx(5.2150962038157327e-06).epsilon(1e-13));
  CHECK(hurwitz_zeta(200, 2.0) == doctest::Approx(6.22301527786114e-61).epsilon(1e-13));
  const auto z1 = log_gamma(std::complex<double>(1.0, 2.0));
  CHECK(z1.real() == doctest::Approx(-1.8760787864309293412).epsilon(1e-13));
  CHECK(z1.imag() == doctest::Approx(0.12964631630978831138).epsilon(1e-12));
  const auto z2 = log_gamma(std::complex<double>(0.3, -7.0));
  CHECK(z2.real() == doctest::Approx(-10.465674446702918896).epsilon(1e-13));
  CHECK(z2.imag() == doctest::Approx(-6.3103096470407681554).epsilon(1e-13));
  CHECK_THROWS_AS(log_gamma(-2.0), DomainError);
}

TEST_CASE("catalog zero streams") {
  const auto g = parse_model("reciprocal_gamma");
  CHECK(g.genus == 1);
  CHECK(g.zeros.at(0).lambda == 0);
  CHECK(g.zeros.at(5).lambda == 5);
  CHECK(g.zeros.at(5).mult == 1);
  CHECK(parse_model("reciprocal_gamma_shifted").zeros.at(0).lambda == 1);

  const auto m3 = parse_model("multiple_gamma:3");
  CHECK(m3.genus == 3);
  for (long k = 0; k < 10; ++k) CHECK(m3.zeros.at(static_cast<std::size_t>(k)).mult == Rational((k + 1) * (k + 2) / 2));

  const auto bg = parse_model("barnes_g");
  CHECK(bg.genus == 2);
  CHECK(bg.zeros.at(0).lambda == 0);
  CHECK(bg.zeros.at(0).mult == 1);
  CHECK(bg.zeros.at(3).mult == 4);
  const auto bs = parse_model("barnes_g_shifted");
  CHECK(bs.zeros.at(0).lambda == 1);
  CHECK(bs.zeros.at(1).mult == 2);

  const auto f = parse_model("finite_zeros:1,1,4");
  CHECK(f.zeros.is_finite());
  CHECK(f.zeros.size() == 2);
  CHECK(f.zeros.at(0).mult == 2);
  CHECK(f.name == "finite_zeros:1,1,4");

  CHECK_THROWS_AS(parse_model("zeta"), DomainError);
  CHECK_THROWS_AS(parse_model("multiple_gamma:0"), DomainError);
  CHECK_THROWS_AS(parse_model("finite_zeros:-1"), DomainError);
}

TEST_CASE("zeros up to T count multiplicities") {
  const auto m2 = parse_model("multiple_gamma:2");
  const auto z = zeros_up_to(m2, Rational(3));
  REQUIRE(z.size() == 4);
  CHECK(m2.zeros.total_multiplicity_up_to(Rational(3)) == 1 + 2 + 3 + 4);
  const auto sq = m2.zeros.squared();
  CHECK(sq.total_multiplicity_up_to(Rational(9)) == m2.zeros.total_multiplicity_up_to(Rational(3)));
}

TEST_CASE("incomplete finite streams refuse to extrapolate") {
  const auto m = make_custom_model(R"j({"genus": 0, "zeros": [[1, 1], [2, 3]], "complete": false})j");
  CHECK_THROWS_AS(m.zeros.up_to(Rational(5)), DomainError);
  CHECK(m.zeros.up_to(Rational(3, 2)).size() == 1);
}

TEST_CASE("custom rule models") {
  const auto m = make_custom_model(R"j({"genus": 3, "rule": "lambda=k+1/2, mult=binom(k+2,2)", "start": 0})j");
  CHECK(m.genus == 3);
  CHECK(m.zeros.at(2).lambda == Rational(5, 2));
  CHECK(m.zeros.at(2).mult == 6);
  CHECK_THROWS_AS(make_custom_model(R"j({"genus": 1, "rule": "lambda=2*k, mult=1"})j"), DomainError);
  CHECK_THROWS_AS(make_custom_model(R"j({"genus": 1, "rule": "lambda=k, mult=k-3"})j"), DomainError);
  CHECK_THROWS_AS(make_custom_model("{not json"), DomainError);
}

TEST_CASE("k polynomials") {
  const auto p = parse_k_polynomial("binom(k+3, 3) - 2*k^2/3 + (k - 1)*(k + 1)");
  for (int k = 0; k < 8; ++k) {
    const Rational kr(k);
    const Rational expect = Rational((k + 3) * (k + 2) * (k + 1), 6) - Rational(2 * k * k, 3) + Rational(k * k - 1);
    CHECK(p(kr) == expect);
  }
  CHECK_THROWS_AS(parse_k_polynomial("k^"), DomainError);
  CHECK_THROWS_AS(parse_k_polynomial("k/k"), DomainError);
}

TEST_CASE("genus sanity") {
  CHECK(genus_sanity(parse_model("reciprocal_gamma")).bounded);
  CHECK(genus_sanity(parse_model("multiple_gamma:2")).bounded);
  // mult k+1 against lambda^-2 grows like log T
  const auto wrong = make_custom_model(R"j({"genus": 1, "rule": "lambda=k, mult=k+1"})j");
  CHECK_FALSE(genus_sanity(wrong).bounded);
}

TEST_CASE("merged shifts of the shifted gamma function") {
  const auto r = merged_shift_supermajorisation(pair_of("0,3,3", "1,1,4"), parse_model("reciprocal_gamma_shifted"), 40);
  CHECK(r.verdict == Verdict::pass);
  REQUIRE(r.trace.size() == 40);
  CHECK(r.trace[0] == 1);
  CHECK(r.trace[1] == 1);
  CHECK(r.trace[2] == 1);
  for (std::size_t m = 3; m < r.trace.size(); ++m) CHECK(r.trace[m] == 0);
  CHECK(r.eventually_stationary);
  const std::vector<Rational> a_head(r.merged_a.begin(), r.merged_a.begin() + 9);
  CHECK(a_head == parse_rational_list("1,2,3,4,4,4,5,5,5"));
  const std::vector<Rational> b_head(r.merged_b.begin(), r.merged_b.begin() + 9);
  CHECK(b_head == parse_rational_list("2,2,3,3,4,4,5,5,5"));
}

TEST_CASE("merged shifts of Barnes G(z+1) and a failing case") {
  const auto g = merged_shift_supermajorisation(pair_of("0,3/2,3/2", "1/2,1/2,2"), parse_model("barnes_g_shifted"), 60);
  CHECK(g.verdict == Verdict::pass);
  const auto bad = merged_shift_supermajorisation(pair_of("1,2", "0,3"), parse_model("reciprocal_gamma"), 20);
  CHECK(bad.verdict == Verdict::fail);
}

TEST_CASE("zero series against direct partial sums") {
  const auto m2 = parse_model("multiple_gamma:2");
  // sum_k (k+1) / (x + k)^3 at x = 0.75
  const double x = 0.75;
  auto head = [&](double lambda) { return std::pow(x + lambda, -3); };
  const SeriesValue v = sum_over_zeros(m2.zeros, x, head, {0, 0, 0, 1}, 16.0);
  long double direct = 0;
  for (long k = 2000000; k >= 0; --k) direct += (k + 1.0L) / std::pow(x + k, 3.0L);
  // tail beyond 2e6 is about 1/2e6
  direct += 1.0L / 2000000.0L;
  CHECK(v.value == doctest::Approx(static_cast<double>(direct)).epsilon(1e-11));
  // squared lattice: sum_k 1/(x + k^2), k >= 1, equals (pi sqrt(x) coth(pi sqrt(x)) - 1) / (2x)
  const auto sq = ZeroStream::lattice(1, Rational(0), Polynomial::constant(1), 2);
  auto h1 = [&](double mu) { return 1.0 / (x + mu); };
  const double closed = (M_PI * std::sqrt(x) / std::tanh(M_PI * std::sqrt(x)) - 1.0) / (2.0 * x);
  CHECK(sum_over_zeros(sq, x, h1, {0, 1}, 16.0).value == doctest::Approx(closed).epsilon(1e-13));
  // sum 1/(x+k) diverges
  CHECK_THROWS_AS(sum_over_zeros(parse_model("reciprocal_gamma").zeros, x, h1, {0, 1}, 16.0), DomainError);
}
