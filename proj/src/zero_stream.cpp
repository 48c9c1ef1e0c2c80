#include "gstieltjes/zero_stream.hpp"

#include <algorithm>
#include <utility>

#include "gstieltjes/errors.hpp"

namespace gstieltjes {

ZeroStream ZeroStream::finite(std::vector<Zero> zeros, bool complete) {
  for (const auto& z : zeros)
    if (z.mult < 0) throw DomainError("zero multiplicities must be non-negative");
  std::sort(zeros.begin(), zeros.end(), [](const Zero& x, const Zero& y) { return x.lambda < y.lambda; });
  ZeroStream s;
  s.finite_ = true;
  s.complete_ = complete;
  for (auto& z : zeros) {
    if (z.mult == 0) continue;
    if (!s.list_.empty() && s.list_.back().lambda == z.lambda)
      s.list_.back().mult += z.mult;
    else
      s.list_.push_back(std::move(z));
  }
  return s;
}

ZeroStream ZeroStream::lattice(long first_index, Rational shift, Polynomial mult, int exponent) {
  if (exponent != 1 && exponent != 2) throw DomainError("lattice exponent must be 1 or 2");
  if (exponent == 2 && Rational(first_index) + shift < 0)
    throw DomainError("squared lattice needs non-negative base values");
  if (mult.is_zero()) throw DomainError("lattice multiplicity must not vanish identically");
  ZeroStream s;
  s.finite_ = false;
  s.complete_ = true;
  s.first_index_ = first_index;
  s.shift_ = std::move(shift);
  s.mult_ = std::move(mult);
  s.exponent_ = exponent;
  return s;
}

Zero ZeroStream::at(std::size_t i) const {
  if (finite_) {
    if (i >= list_.size()) throw DomainError("insufficient zeros");
    return list_[i];
  }
  const Rational k(first_index_ + static_cast<long>(i));
  Rational u = k + shift_;
  Rational lambda = exponent_ == 1 ? u : u * u;
  Rational mult = mult_(k);
  if (mult < 0) throw DomainError("lattice multiplicity is negative at k = " + to_string(k));
  return {std::move(lambda), std::move(mult)};
}

std::vector<Zero> ZeroStream::up_to(const Rational& T) const {
  std::vector<Zero> out;
  for (std::size_t i = 0; has(i); ++i) {
    Zero z = at(i);
    if (z.lambda > T) return out;
    if (z.mult != 0) out.push_back(std::move(z));
  }
  if (!complete_) throw DomainError("insufficient zeros");
  return out;
}

Rational ZeroStream::total_multiplicity_up_to(const Rational& T) const {
  Rational total(0);
  for (const auto& z : up_to(T)) total += z.mult;
  return total;
}

ZeroStream ZeroStream::squared() const {
  if (finite_) {
    std::vector<Zero> sq;
    sq.reserve(list_.size());
    for (const auto& z : list_) sq.push_back({z.lambda * z.lambda, z.mult});
    return finite(std::move(sq), complete_);
  }
  if (exponent_ != 1) throw DomainError("stream is already squared");
  return lattice(first_index_, shift_, mult_, 2);
}

ZeroStream ZeroStream::translated(const Rational& c) const {
  if (finite_) {
    std::vector<Zero> moved = list_;
    for (auto& z : moved) z.lambda += c;
    return finite(std::move(moved), complete_);
  }
  if (exponent_ != 1) throw DomainError("cannot translate a squared lattice");
  ZeroStream s = *this;
  s.shift_ += c;
  return s;
}

}  // namespace gstieltjes
