#include "gstieltjes/sequences.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "gstieltjes/errors.hpp"

namespace gstieltjes {

SequencePair::SequencePair(std::vector<Rational> a, std::vector<Rational> b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.empty() || a_.size() != b_.size())
    throw DomainError("sequence pair needs two tuples of equal length n >= 1");
  for (const auto* v : {&a_, &b_})
    for (const auto& x : *v)
      if (x < 0) throw DomainError("sequence entries must be non-negative");
  std::sort(a_.begin(), a_.end());
  std::sort(b_.begin(), b_.end());
}

Rational SequencePair::max_entry() const { return std::max(a_.back(), b_.back()); }
Rational SequencePair::min_entry() const { return std::min(a_.front(), b_.front()); }

bool operator<(const SequencePair& x, const SequencePair& y) {
  if (x.a_ != y.a_) return std::lexicographical_compare(x.a_.begin(), x.a_.end(), y.a_.begin(), y.a_.end());
  return std::lexicographical_compare(x.b_.begin(), x.b_.end(), y.b_.begin(), y.b_.end());
}

Rational power_sum_delta(const SequencePair& pair, int m) {
  if (m < 0) throw DomainError("power sum index must be non-negative");
  Rational sum(0);
  for (std::size_t k = 0; k < pair.size(); ++k)
    sum += power(pair.a()[k], static_cast<unsigned>(m)) - power(pair.b()[k], static_cast<unsigned>(m));
  return sum;
}

std::vector<double> power_sum_deltas(const SequencePair& pair, int max_m) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(max_m) + 1);
  std::vector<Rational> pa(pair.size(), Rational(1));
  std::vector<Rational> pb(pair.size(), Rational(1));
  for (int m = 0; m <= max_m; ++m) {
    Rational sum(0);
    for (std::size_t k = 0; k < pair.size(); ++k) {
      sum += pa[k] - pb[k];
      pa[k] *= pair.a()[k];
      pb[k] *= pair.b()[k];
    }
    out.push_back(to_double(sum));
  }
  return out;
}

bool is_weak_supermajorisation(const SequencePair& pair) {
  Rational sa(0);
  Rational sb(0);
  for (std::size_t k = 0; k < pair.size(); ++k) {
    sa += pair.a()[k];
    sb += pair.b()[k];
    if (sa > sb) return false;
  }
  return true;
}

int pte_degree(const SequencePair& pair) {
  if (pair.identical()) return kInfiniteDegree;
  // Equal power sums for j = 0..n force equal multisets, so the answer is below n.
  int degree = 0;
  for (int j = 1; j <= static_cast<int>(pair.size()); ++j) {
    if (power_sum_delta(pair, j) != 0) break;
    degree = j;
  }
  return degree;
}

namespace {

void enumerate_tuples(int n, int max_value, bool distinct, std::vector<int>& current,
                      std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == n) {
    out.push_back(current);
    return;
  }
  int start = current.empty() ? 0 : current.back() + (distinct ? 1 : 0);
  for (int v = start; v <= max_value; ++v) {
    current.push_back(v);
    enumerate_tuples(n, max_value, distinct, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<SequencePair> pte_search(int n, int max_value, int ell, bool distinct_entries) {
  if (n < 1 || max_value < 1 || ell < 1) throw DomainError("pte_search needs n >= 1, max_value >= 1, ell >= 1");
  // Distinct multisets of size n cannot agree in all power sums of degree 1..n.
  if (ell >= n) return {};
  std::vector<std::vector<int>> tuples;
  std::vector<int> current;
  enumerate_tuples(n, max_value, distinct_entries, current, tuples);

  // Group tuples by their power sums of degree 1..ell; pairs inside a group are solutions.
  std::map<std::vector<Integer>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    std::vector<Integer> key(static_cast<std::size_t>(ell));
    for (int v : tuples[i]) {
      Integer p(1);
      for (int j = 1; j <= ell; ++j) {
        p *= v;
        key[static_cast<std::size_t>(j - 1)] += p;
      }
    }
    groups[key].push_back(i);
  }

  std::vector<SequencePair> out;
  for (const auto& [key, members] : groups) {
    for (std::size_t x = 0; x < members.size(); ++x)
      for (std::size_t y = 0; y < members.size(); ++y) {
        const auto& ta = tuples[members[x]];
        const auto& tb = tuples[members[y]];
        if (ta.front() >= tb.front()) continue;
        std::vector<Rational> a(ta.begin(), ta.end());
        std::vector<Rational> b(tb.begin(), tb.end());
        out.emplace_back(std::move(a), std::move(b));
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gstieltjes
