#include "sunstar/rational.hpp"

#include <cstddef>
#include <stdexcept>

namespace sunstar {

namespace {

// Consumes an optionally signed integer literal starting at pos.
Integer parse_integer(const std::string& text, std::size_t& pos) {
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  Integer value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + (text[pos] - '0');
    ++pos;
  }
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::size_t pos = 0;
  const Integer num = parse_integer(text, pos);
  if (pos == text.size()) {
    return Rational(num);
  }
  if (text[pos] != '/') {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  ++pos;
  const Integer den = parse_integer(text, pos);
  if (pos != text.size()) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  if (den <= 0) {
    throw std::invalid_argument("rational denominator must be positive: '" + text + "'");
  }
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) {
    return numerator(r).str();
  }
  return numerator(r).str() + "/" + denominator(r).str();
}

Integer factorial(int n) {
  if (n < 0) {
    throw std::invalid_argument("factorial of negative argument");
  }
  Integer result = 1;
  for (int i = 2; i <= n; ++i) {
    result *= i;
  }
  return result;
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  Integer result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

Rational rational_pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    throw std::invalid_argument("rational_pow exponent must be >= 0");
  }
  Rational result = 1;
  Rational acc = base;
  for (int e = exponent; e > 0; e >>= 1) {
    if (e & 1) {
      result *= acc;
    }
    if (e > 1) {
      acc *= acc;
    }
  }
  return result;
}

}  // namespace sunstar
