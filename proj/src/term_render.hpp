#pragma once

// Shared canonical term renderer for polynomial, nu-series and operator
// printing.  A term is coefficient * x-powers [* derivative-powers] [* nu^r];
// the coefficient magnitude is omitted when it is 1 and any other factor is
// present, exponent 1 is omitted, and terms are joined with " + " / " - "
// (a leading minus is attached bare).

#include "sunstar/multi_index.hpp"
#include "sunstar/rational.hpp"

#include <string>

namespace sunstar::detail {

inline void append_powers(std::string& factors, const MultiIndex& k, char symbol) {
  for (int i = 0; i < k.dim(); ++i) {
    if (k[i] == 0) {
      continue;
    }
    if (!factors.empty()) {
      factors += "*";
    }
    factors += symbol;
    factors += std::to_string(i + 1);
    if (k[i] > 1) {
      factors += "^" + std::to_string(k[i]);
    }
  }
}

inline void render_term(std::string& out, const Rational& coeff,
                        const MultiIndex& k, int nu_power,
                        const MultiIndex* deriv = nullptr, char symbol = 'x') {
  const bool negative = coeff < 0;
  if (out.empty()) {
    if (negative) {
      out += "-";
    }
  } else {
    out += negative ? " - " : " + ";
  }
  const Rational magnitude = negative ? Rational(-coeff) : coeff;

  std::string factors;
  append_powers(factors, k, symbol);
  if (deriv != nullptr) {
    append_powers(factors, *deriv, 'd');
  }
  if (nu_power > 0) {
    if (!factors.empty()) {
      factors += "*";
    }
    factors += "nu";
    if (nu_power > 1) {
      factors += "^" + std::to_string(nu_power);
    }
  }

  if (factors.empty()) {
    out += to_string(magnitude);
  } else if (magnitude == 1) {
    out += factors;
  } else {
    out += to_string(magnitude) + "*" + factors;
  }
}

}  // namespace sunstar::detail
