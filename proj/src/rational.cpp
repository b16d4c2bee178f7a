#include "bjcalc/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace bjcalc {

BigInt factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned k = 2; k <= n; ++k) result *= k;
  return result;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (unsigned j = 1; j <= k; ++j) {
    result *= n - k + j;
    result /= j;
  }
  return result;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational factor = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= factor;
    exponent >>= 1;
    if (exponent != 0) factor *= factor;
  }
  return result;
}

std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt parse_decimal(std::string_view digits) {
  const std::size_t first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return BigInt(std::string(digits.substr(first)));
}

Rational parse_rational(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto read_digits = [&](BigInt& out) {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("expected digits in rational '" + text + "'");
    out = parse_decimal(std::string_view(text).substr(start, pos - start));
  };
  BigInt num;
  BigInt den = 1;
  read_digits(num);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    read_digits(den);
    if (den == 0) throw std::invalid_argument("zero denominator in rational '" + text + "'");
  }
  if (pos != text.size()) throw std::invalid_argument("trailing characters in rational '" + text + "'");
  Rational q(num, den);
  return negative ? Rational(-q) : q;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace bjcalc
