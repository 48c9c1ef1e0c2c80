#pragma once

#include <functional>
#include <vector>

#include "gstieltjes/zero_stream.hpp"

namespace gstieltjes {

struct SeriesValue {
  double value;
  double error;  // estimate of the truncation error of the tail expansion
  long terms;    // zeros summed term by term
};

/// sum_k mult_k * F(lambda_k) over a zero stream, with y = x + lambda.
/// `head` evaluates F(lambda) exactly. For lattice streams the terms with y >= switch_at are
/// replaced by the expansion F = sum_e coeffs[e] * y^-e, summed through Hurwitz zeta values.
/// Throws DomainError when the expansion does not give a convergent tail.
SeriesValue sum_over_zeros(const ZeroStream& zeros, double x, const std::function<double(double)>& head,
                           const std::vector<double>& coeffs, double switch_at, long max_terms = 10'000'000);

}  // namespace gstieltjes
