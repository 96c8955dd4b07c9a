#pragma once

// Exact rational scalars. All coefficient arithmetic in the library is performed
// over arbitrary-precision rationals; values are always reduced with a positive
// denominator, and zero is 0/1.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace sunstar {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p" or "p/q" with an optional leading '-' on p and q > 0.
// Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);

Integer factorial(int n);
Integer binomial(int n, int k);

// Integer power with exponent >= 0.
Rational rational_pow(const Rational& base, int exponent);

}  // namespace sunstar
