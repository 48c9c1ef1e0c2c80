#include "gstieltjes/rational.hpp"

#include <cctype>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "gstieltjes/errors.hpp"

namespace gstieltjes {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational parse_decimal(std::string_view s, std::string_view original) {
  auto fail = [&]() -> Rational {
    throw DomainError("malformed rational '" + std::string(original) + "'");
  };
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) return fail();
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) return fail();
  if (!int_part.empty() && !all_digits(int_part)) return fail();
  if (!frac_part.empty() && !all_digits(frac_part)) return fail();

  std::string digits = std::string(int_part) + std::string(frac_part);
  // a leading zero would make GMP read the digits as octal
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
  Integer numerator(digits.empty() ? std::string("0") : digits);
  exponent -= static_cast<long>(frac_part.size());
  Rational result(numerator);
  Integer ten_pow = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(std::labs(exponent)));
  if (exponent >= 0)
    result *= Rational(ten_pow);
  else
    result /= Rational(ten_pow);
  return negative ? Rational(-result) : result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw DomainError("empty rational literal");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(trim(s.substr(0, slash)), text);
    Rational den = parse_decimal(trim(s.substr(slash + 1)), text);
    if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    return num / den;
  }
  return parse_decimal(s, text);
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    out.push_back(parse_rational(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

Rational exact_rational(double value) {
  if (!std::isfinite(value)) throw DomainError("non-finite value cannot be made rational");
  if (value == 0.0) return Rational(0);
  int exp2 = 0;
  double mantissa = std::frexp(value, &exp2);  // value = mantissa * 2^exp2, 0.5 <= |m| < 1
  auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  exp2 -= 53;
  Rational result{Integer(scaled)};
  Integer two_pow = boost::multiprecision::pow(Integer(2), static_cast<unsigned>(std::abs(exp2)));
  if (exp2 >= 0)
    result *= Rational(two_pow);
  else
    result /= Rational(two_pow);
  return result;
}

Rational rational_from_double(double value) {
  Rational r = exact_rational(value);
  static const Integer limit = boost::multiprecision::pow(Integer(2), 32);
  if (boost::multiprecision::denominator(r) > limit)
    throw DomainError("value " + std::to_string(value) +
                      " is not an exact rational with denominator <= 2^32; pass it as p/q");
  return r;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Rational power(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

int sign(const Rational& value) { return value > 0 ? 1 : (value < 0 ? -1 : 0); }

std::string to_string(const Rational& value) { return value.str(); }

}  // namespace gstieltjes
