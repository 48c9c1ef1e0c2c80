#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gstieltjes/polynomial.hpp"
#include "gstieltjes/rational.hpp"

namespace gstieltjes {

/// A zero of f at -lambda with the given multiplicity.
struct Zero {
  Rational lambda;
  Rational mult;
};

/// Non-decreasing stream of (lambda, multiplicity). Either a finite list or an integer
/// lattice lambda_k = (k + shift)^exponent, k >= first_index, with multiplicity P(k).
class ZeroStream {
 public:
  /// Sorts by lambda and merges repeated values. An incomplete stream is a prefix of an
  /// unknown longer stream; sums past its last entry raise "insufficient zeros".
  static ZeroStream finite(std::vector<Zero> zeros, bool complete = true);
  /// exponent is 1 or 2; for exponent 2 the shift must make k + shift >= 0 for all k.
  static ZeroStream lattice(long first_index, Rational shift, Polynomial mult, int exponent = 1);

  bool is_finite() const { return finite_; }
  bool complete() const { return complete_; }
  /// Number of entries of a finite stream.
  std::size_t size() const { return list_.size(); }

  long first_index() const { return first_index_; }
  const Rational& shift() const { return shift_; }
  const Polynomial& mult_poly() const { return mult_; }
  int exponent() const { return exponent_; }

  /// Entry i (0-based). Throws DomainError past the end of a finite stream.
  Zero at(std::size_t i) const;
  bool has(std::size_t i) const { return !finite_ || i < list_.size(); }

  /// All entries with lambda <= T, in order, entries with zero multiplicity dropped.
  std::vector<Zero> up_to(const Rational& T) const;
  Rational total_multiplicity_up_to(const Rational& T) const;

  /// Stream of (lambda^2, mult), re-sorted.
  ZeroStream squared() const;
  /// Stream of (lambda + c, mult). For lattices the shift changes; lambda must stay >= 0
  /// only where the caller needs it.
  ZeroStream translated(const Rational& c) const;

 private:
  bool finite_ = true;
  bool complete_ = true;
  std::vector<Zero> list_;
  long first_index_ = 0;
  Rational shift_{0};
  Polynomial mult_;
  int exponent_ = 1;
};

}  // namespace gstieltjes
