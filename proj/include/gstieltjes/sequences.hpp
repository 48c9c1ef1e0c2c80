#pragma once

#include <limits>
#include <span>
#include <vector>

#include "gstieltjes/rational.hpp"

namespace gstieltjes {

/// Two sorted tuples a, b of equal length with non-negative rational entries.
class SequencePair {
 public:
  /// Sorts both tuples. Throws DomainError on unequal or zero length, or negative entries.
  SequencePair(std::vector<Rational> a, std::vector<Rational> b);

  const std::vector<Rational>& a() const { return a_; }
  const std::vector<Rational>& b() const { return b_; }
  std::size_t size() const { return a_.size(); }
  bool identical() const { return a_ == b_; }
  /// max(a_n, b_n)
  Rational max_entry() const;
  /// min(a_1, b_1)
  Rational min_entry() const;

  friend bool operator==(const SequencePair& x, const SequencePair& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator<(const SequencePair& x, const SequencePair& y);

 private:
  std::vector<Rational> a_;
  std::vector<Rational> b_;
};

inline constexpr int kInfiniteDegree = std::numeric_limits<int>::max();

/// sum a_k^m - sum b_k^m, exact.
Rational power_sum_delta(const SequencePair& pair, int m);

/// Power sum differences Delta_0 .. Delta_max_m converted to double.
std::vector<double> power_sum_deltas(const SequencePair& pair, int max_m);

/// True iff sum_{k<=m} a_k <= sum_{k<=m} b_k for every m.
bool is_weak_supermajorisation(const SequencePair& pair);

/// Largest l with Delta_j = 0 for all j <= l; kInfiniteDegree when a == b.
int pte_degree(const SequencePair& pair);

/// All pairs with entries in {0..max_value}, a_1 < b_1 and pte_degree >= ell, in
/// lexicographic order of (a, b). With distinct_entries, each tuple has pairwise distinct
/// entries (the classical Prouhet-Tarry-Escott setting).
std::vector<SequencePair> pte_search(int n, int max_value, int ell, bool distinct_entries = false);

}  // namespace gstieltjes
