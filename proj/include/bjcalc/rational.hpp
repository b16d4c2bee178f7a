#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace bjcalc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

Rational pow(const Rational& base, unsigned exponent);

// "a/b", or "a" when the denominator is one.
std::string to_string(const Rational& q);

// Accepts "a", "-a", "a/b". Throws std::invalid_argument otherwise.
Rational parse_rational(const std::string& text);

/// Base-ten value of a non-empty digit string; leading zeros are not an octal prefix.
BigInt parse_decimal(std::string_view digits);

double to_double(const Rational& q);

}  // namespace bjcalc
