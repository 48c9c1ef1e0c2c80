// One PASS/FAIL line per acceptance criterion, with indented diagnostics under failing ones.
#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gstieltjes/catalog.hpp"
#include "gstieltjes/kernels.hpp"
#include "gstieltjes/piecewise.hpp"
#include "gstieltjes/representations.hpp"
#include "gstieltjes/sequences.hpp"
#include "gstieltjes/vertical.hpp"

using namespace gstieltjes;

namespace {

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> notes;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string num(double v) { return fmt("%.17g", v); }

SequencePair pair_of(const char* a, const char* b) { return SequencePair(parse_rational_list(a), parse_rational_list(b)); }

double rel(double x, double ref) { return std::abs(x - ref) / std::max(std::abs(ref), 1e-300); }

Outcome c1_rho_signs() {
  Outcome o;
  const auto p = pair_of("0,4,5", "1,2,6");
  const auto rho1 = build_rho(p, 1);
  const auto rho2 = build_rho(p, 2);
  const auto cert2 = certify_nonnegative(rho2);
  const auto cert1 = certify_nonnegative(rho1);
  const Rational at = rho1(Rational(9, 2));
  const auto end = rho2.support_end();
  o.pass = cert2.nonnegative && !cert1.nonnegative && at == Rational(-1) && end && *end <= Rational(6) &&
           pte_degree(p) == 2;
  o.summary = std::string("rho2 >= 0 certified: ") + (cert2.nonnegative ? "yes" : "no") +
              ", rho1(9/2) = " + to_string(at) + ", rho2 vanishes from t = " + (end ? to_string(*end) : "never");
  return o;
}

Outcome c2_laplace_rho() {
  Outcome o;
  double worst = 0.0;
  for (const auto& [p, ell] : {std::pair{pair_of("0,3", "1,2"), 1}, std::pair{pair_of("0,4,5", "1,2,6"), 2}})
    for (double s : {0.3, 1.0, 3.0}) worst = std::max(worst, laplace_rho_identity(p, ell, s).abs_diff);
  o.pass = worst < 1e-12;
  o.summary = "max |g_ell - Laplace(rho_ell)/ell!| = " + fmt("%.3g", worst);
  return o;
}

Outcome c3_factorisation() {
  Outcome o;
  const auto p = pair_of("0,3", "1,2");
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double s = 0.1 + (5.0 - 0.1) * i / 19.0;
    const double expect = -std::expm1(-s) * -std::expm1(-2 * s) / (s * s);
    worst = std::max(worst, std::abs(g_ell(p, 1, s) - expect));
  }
  o.pass = worst < 1e-12;
  o.summary = "max abs deviation on 20 points in [0.1, 5] = " + fmt("%.3g", worst);
  return o;
}

Outcome c4_three_way() {
  Outcome o;
  const RatioSpec spec{parse_model("reciprocal_gamma"), pair_of("0,3", "1,2")};
  double worst = 0.0;
  double at1 = 0.0;
  for (double x : {1.0, 2.5, 10.0}) {
    // W = Gamma(x+1)Gamma(x+2) / (Gamma(x)Gamma(x+3))
    const double direct = -(std::lgamma(x + 1) + std::lgamma(x + 2) - std::lgamma(x) - std::lgamma(x + 3));
    const double lap = laplace_side(spec, 1, x, 1e-11);
    const double sti = stieltjes_side(spec, 1, x, 1e-11);
    worst = std::max({worst, rel(lap, direct), rel(sti, direct), rel(sti, lap)});
    if (x == 1.0) at1 = direct;
  }
  const double d3 = std::abs(at1 - std::log(3.0));
  o.pass = worst < 1e-7 && d3 < 1e-10;
  o.summary = "max pairwise rel deviation = " + fmt("%.3g", worst) + ", |direct(1) - log 3| = " + fmt("%.3g", d3);
  return o;
}

Outcome c5_barnes() {
  Outcome o;
  const RatioSpec spec{parse_model("multiple_gamma:2"), pair_of("0,3/2,3/2", "1/2,1/2,2")};
  double worst = 0.0;
  double worst_flipped = 0.0;
  for (double x : {1.0, 2.5}) {
    const double d1 = dlogW_direct(spec, 1, x, 1e-13, DirectMethod::series);
    const double lap = laplace_integral(spec, 1, 2, x, 1e-12);
    worst = std::max(worst, rel(-d1, lap));
    worst_flipped = std::max(worst_flipped, rel(d1, lap));
    o.notes.push_back("x = " + num(x) + ": -d log W = " + num(-d1) + ", Laplace side = " + num(lap));
  }
  const double target = std::log(boost::math::tgamma(2.0) * boost::math::tgamma(3.0) / std::pow(boost::math::tgamma(2.5), 2));
  const double neg_log_w = -dlogW_direct(spec, 0, 1.0, 1e-13);
  const RatioSpec shifted{parse_model("barnes_g_shifted"), spec.pair};
  const double neg_log_w_shifted = -dlogW_direct(shifted, 0, 1.0, 1e-13);
  const bool part1 = worst < 1e-6;
  const bool part2 = std::abs(neg_log_w - target) < 1e-9;
  o.pass = part1 && part2;
  o.summary = std::string("-d log W vs Laplace side: ") + (part1 ? "agree" : "disagree") + " (max rel " +
              fmt("%.3g", worst) + "); -log W(1) = " + num(neg_log_w) + " vs " + num(target);
  o.notes.push_back("+d log W against the Laplace side: max rel deviation " + fmt("%.3g", worst_flipped) +
                    ", so the sign consistent with the integral is (-1)^N, not (-1)^(N-1)");
  o.notes.push_back("-log W(1) for f = G(z+1) instead of 1/Gamma_2: " + num(neg_log_w_shifted) + " (deviation " +
                    fmt("%.3g", std::abs(neg_log_w_shifted - target)) + ")");
  o.notes.push_back("1/Gamma_2 has the zeros of G(z), not of G(z+1), so the two ratios differ");
  return o;
}

Outcome c6_merged_shift() {
  Outcome o;
  const auto p = pair_of("0,3,3", "1,1,4");
  const auto model = parse_model("reciprocal_gamma_shifted");
  const auto ms = merged_shift_supermajorisation(p, model, 12);
  bool trace_ok = ms.verdict == Verdict::pass && ms.trace.size() == 12;
  for (std::size_t k = 0; k < ms.trace.size() && trace_ok; ++k) trace_ok = ms.trace[k] == Rational(k < 3 ? 1 : 0);
  std::string trace;
  for (const auto& t : ms.trace) trace += (trace.empty() ? "" : ",") + to_string(t);

  const RatioSpec spec{model, p};
  auto theta = [](double x) { return std::log1p(1.0 / x); };
  double worst = 0.0;
  double worst_alt = 0.0;
  for (double x : {1.0, 5.0}) {
    const double v = -dlogW_direct(spec, 0, x, 1e-14);
    worst = std::max(worst, std::abs(v - (theta(x + 2) - theta(x + 4))));
    worst_alt = std::max(worst_alt, std::abs(v - (theta(x + 1) - theta(x + 3))));
    o.notes.push_back("x = " + num(x) + ": -log W = " + num(v) + ", theta(x+2)-theta(x+4) = " +
                      num(theta(x + 2) - theta(x + 4)));
  }
  o.pass = trace_ok && worst < 1e-10;
  o.summary = "trace " + trace + (trace_ok ? " (ok)" : " (unexpected)") + "; max |-log W - (theta(x+2)-theta(x+4))| = " +
              fmt("%.3g", worst);
  o.notes.push_back("against theta(x+1)-theta(x+3) the max deviation is " + fmt("%.3g", worst_alt) +
                    ": W = (x+1)(x+4)/((x+2)(x+3)) for the zeros 1, 2, 3, ...");
  return o;
}

Outcome c7_expansion() {
  Outcome o;
  const RatioSpec spec{parse_model("multiple_gamma:3"), pair_of("0,4,5", "1,2,6")};
  const auto r = verify_identity(spec, IdentityId::lemma24, 2, {12.0, 30.0}, 1e-6);
  double worst = 0.0;
  for (const auto& c : r.rel_deviation)
    for (double v : c.values) worst = std::max(worst, v);
  o.pass = r.status == "pass";
  o.summary = "status " + r.status + ", max rel deviation = " + fmt("%.3g", worst);
  if (!o.pass) o.notes = r.notes;
  return o;
}

Outcome c8_vertical() {
  Outcome o;
  const auto vm = make_vertical(parse_model("reciprocal_gamma"));
  const auto r = verify_vertical(vm, {VerticalId::cor32, 1.0, {}}, {0.5, 1.0, 4.0}, 1e-6);
  double worst = 0.0;
  for (const auto& c : r.abs_deviation)
    for (double v : c.values) worst = std::max(worst, v);
  o.pass = r.status == "pass" && worst < 1e-6;
  o.summary = "status " + r.status + ", max abs deviation = " + fmt("%.3g", worst);
  if (!o.pass) o.notes = r.notes;
  return o;
}

// Every pair of non-decreasing integer tuples with entries in [0, max] and a_1 < b_1 with
// equal power sums up to ell.
std::vector<SequencePair> pte_brute_force(int n, int max_value, int ell) {
  std::vector<std::vector<int>> tuples;
  std::vector<int> t(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int lo) {
    if (i == n) {
      tuples.push_back(t);
      return;
    }
    for (int v = lo; v <= max_value; ++v) {
      t[static_cast<std::size_t>(i)] = v;
      rec(i + 1, v);
    }
  };
  rec(0, 0);
  std::vector<SequencePair> out;
  for (const auto& a : tuples)
    for (const auto& b : tuples) {
      if (a.front() >= b.front()) continue;
      bool eq = true;
      for (int j = 1; j <= ell && eq; ++j) {
        long long sa = 0;
        long long sb = 0;
        for (int i = 0; i < n; ++i) {
          sa += static_cast<long long>(std::pow(a[static_cast<std::size_t>(i)], j));
          sb += static_cast<long long>(std::pow(b[static_cast<std::size_t>(i)], j));
        }
        eq = sa == sb;
      }
      if (eq) out.emplace_back(std::vector<Rational>(a.begin(), a.end()), std::vector<Rational>(b.begin(), b.end()));
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::string pair_text(const SequencePair& p) {
  std::string s = "((";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + to_string(p.a()[i]);
  s += "),(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + to_string(p.b()[i]);
  return s + "))";
}

Outcome c9_pte() {
  Outcome o;
  const auto found = pte_search(3, 6, 2);
  const auto oracle = pte_brute_force(3, 6, 2);
  const bool oracle_agrees = found == oracle;
  const bool exactly_orbit = found.size() == 1 && found[0] == pair_of("0,4,5", "1,2,6");

  // Equal first and second power sums with b weakly supermajorised by a force a = b. b is drawn
  // among all tuples sharing the first two power sums of a.
  std::mt19937 rng(4242);
  int counterexamples = 0;
  int nontrivial = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 5)(rng);
    const int max_value = std::uniform_int_distribution<int>(3, 9)(rng);
    std::vector<std::vector<int>> tuples;
    std::vector<int> t(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int lo) {
      if (i == n) return tuples.push_back(t);
      for (int v = lo; v <= max_value; ++v) {
        t[static_cast<std::size_t>(i)] = v;
        rec(i + 1, v);
      }
    };
    rec(0, 0);
    const auto& a = tuples[std::uniform_int_distribution<std::size_t>(0, tuples.size() - 1)(rng)];
    auto sums = [](const std::vector<int>& v) {
      long s1 = 0;
      long s2 = 0;
      for (int e : v) {
        s1 += e;
        s2 += e * e;
      }
      return std::pair{s1, s2};
    };
    std::vector<const std::vector<int>*> same;
    for (const auto& c : tuples)
      if (sums(c) == sums(a)) same.push_back(&c);
    const auto& b = *same[std::uniform_int_distribution<std::size_t>(0, same.size() - 1)(rng)];
    const SequencePair p(std::vector<Rational>(a.begin(), a.end()), std::vector<Rational>(b.begin(), b.end()));
    if (a != b) ++nontrivial;
    if (a != b && is_weak_supermajorisation(p)) ++counterexamples;
  }
  // Ideal solutions (pte degree n - 1) with a_1 < b_1 have rho_{n-1} >= 0.
  int ideal = 0;
  int ideal_bad = 0;
  for (const auto& p : found) {
    if (pte_degree(p) != static_cast<int>(p.size()) - 1 || !(p.a()[0] < p.b()[0])) continue;
    ++ideal;
    if (!certify_nonnegative(build_rho(p, static_cast<int>(p.size()) - 1)).nonnegative) ++ideal_bad;
  }
  o.pass = exactly_orbit && oracle_agrees && counterexamples == 0 && ideal_bad == 0;
  o.summary = "pte_search(3,6,2) returned " + std::to_string(found.size()) + " pair(s), brute force " +
              (oracle_agrees ? "agrees" : "disagrees") + "; random check " + std::to_string(counterexamples) +
              " counterexamples in 10000 draws (" + std::to_string(nontrivial) + " with a != b); rho_{n-1} >= 0 for " +
              std::to_string(ideal - ideal_bad) + "/" + std::to_string(ideal) + " ideal solutions";
  if (!exactly_orbit) {
    for (const auto& p : found) o.notes.push_back("found " + pair_text(p));
    const auto distinct = pte_search(3, 6, 2, true);
    o.notes.push_back("restricted to distinct entries the search returns " + std::to_string(distinct.size()) +
                      " pair(s)" + (distinct.size() == 1 ? ": " + pair_text(distinct[0]) : ""));
    o.notes.push_back("the extra pairs are translates of ((0,3,3),(1,1,4)), itself used as an example with repeated entries");
  }
  return o;
}

Outcome c10_cm() {
  Outcome o;
  const RatioSpec spec{parse_model("reciprocal_gamma"), pair_of("0,3", "1,2")};
  std::vector<double> grid;
  for (double x = 0.5; x <= 20.0 + 1e-12; x += 0.25) grid.push_back(x);
  const auto r = cm_test([&](double x) { return -dlogW_direct(spec, 0, x, 1e-14); }, 6, grid, 0.05, 1e-9);
  o.pass = r.pass;
  o.summary = "order 6 on " + std::to_string(grid.size()) + " points in [0.5, 20]";
  if (r.first_violation)
    o.notes.push_back("first violation at x = " + num(r.first_violation->x) + ", order " +
                      std::to_string(r.first_violation->order));
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "rho_1 / rho_2 sign certificates", 1, c1_rho_signs},
      {2, "Laplace transform of rho_ell", 1, c2_laplace_rho},
      {3, "factorisation of g", 1, c3_factorisation},
      {4, "three-way agreement, Gamma", 10, c4_three_way},
      {5, "Barnes double gamma, N = 2", 30, c5_barnes},
      {6, "merged-shift variant", 1, c6_merged_shift},
      {7, "expansion with C_{m,ell}", 30, c7_expansion},
      {8, "vertical line, Gamma", 5, c8_vertical},
      {9, "Prouhet-Tarry-Escott properties", 60, c9_pte},
      {10, "complete monotonicity sampling", 5, c10_cm},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.summary = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.budget_s;
    const bool ok = o.pass && in_time;
    if (!ok) ++failed;
    std::printf("criterion %2d %s  %s: %s [%.2f s%s]\n", c.id, ok ? "PASS" : "FAIL", c.name, o.summary.c_str(), secs,
                in_time ? "" : ", over budget");
    if (!ok)
      for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
