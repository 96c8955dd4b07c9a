#pragma once

// Truncated formal power series in the deformation parameter nu with
// polynomial coefficients.  Every series carries its truncation order R and
// stores coefficients for nu^0..nu^R; combining series of different orders or
// dimensions is an error rather than a silent re-truncation.

#include "sunstar/polynomial.hpp"

#include <string>
#include <vector>

namespace sunstar {

class NuSeries {
 public:
  NuSeries(int dim, int order);
  static NuSeries from_polynomial(const Polynomial& p, int order);

  int dim() const { return dim_; }
  int order() const { return order_; }

  const Polynomial& coeff(int r) const;
  void set_coeff(int r, const Polynomial& p);
  void add_coeff(int r, const Polynomial& p);

  bool is_zero() const;
  // True when every coefficient of nu^r with r >= 1 vanishes.
  bool is_constant_in_nu() const;
  // The classical-limit projection nu -> 0.
  const Polynomial& project() const { return coeffs_[0]; }

  NuSeries operator-() const;
  NuSeries operator+(const NuSeries& other) const;
  NuSeries operator-(const NuSeries& other) const;
  // Cauchy product truncated at the common order.
  NuSeries operator*(const NuSeries& other) const;
  NuSeries operator*(const Rational& scalar) const;
  NuSeries& operator+=(const NuSeries& other);
  NuSeries& operator-=(const NuSeries& other);

  bool operator==(const NuSeries& other) const;
  bool operator!=(const NuSeries& other) const { return !(*this == other); }

 private:
  void check_compatible(const NuSeries& other) const;

  int dim_;
  int order_;
  std::vector<Polynomial> coeffs_;
};

// Canonical text form: monomial terms ordered by ascending nu power, each
// coefficient polynomial in descending graded-lex order, e.g. "x1*x2 + nu".
std::string to_string(const NuSeries& s);

}  // namespace sunstar
