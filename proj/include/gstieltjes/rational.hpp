#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace gstieltjes {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Parses "p/q", an integer, or a decimal literal ("-1.25", "3e-2") exactly.
/// Throws DomainError on malformed input.
Rational parse_rational(std::string_view text);

/// Parses a comma separated list of rationals, e.g. "0,3/2,1.5".
std::vector<Rational> parse_rational_list(std::string_view text);

/// Exact value of a finite double. Accepted only when the reduced denominator is at
/// most 2^32, so that values like 0.1 (which are not short rationals) are rejected.
Rational rational_from_double(double value);

/// Exact value of any finite double, no denominator limit.
Rational exact_rational(double value);

double to_double(const Rational& value);

Rational power(const Rational& base, unsigned exponent);

int sign(const Rational& value);

std::string to_string(const Rational& value);

}  // namespace gstieltjes
