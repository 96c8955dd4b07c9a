#pragma once

// Multivariate polynomials over the rationals in variables x1..xn, stored as a
// sparse term map in graded lexicographic order.  Zero coefficients are never
// stored, so structural equality is semantic equality.

#include "sunstar/multi_index.hpp"
#include "sunstar/rational.hpp"

#include <map>
#include <string>

namespace sunstar {

class Polynomial {
 public:
  using TermMap = std::map<MultiIndex, Rational, GradedLexLess>;

  explicit Polynomial(int dim);
  static Polynomial constant(int dim, const Rational& c);
  // x_{i+1} for 0-based variable index i.
  static Polynomial variable(int dim, int i);
  static Polynomial monomial(const MultiIndex& k, const Rational& c);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  // Total degree; -1 for the zero polynomial.
  int degree() const;
  const TermMap& terms() const { return terms_; }
  Rational coefficient(const MultiIndex& k) const;

  // Accumulates c * x^k, dropping the term if the sum cancels.
  void add_term(const MultiIndex& k, const Rational& c);

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& scalar) const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  // d/dx_i for 0-based i.
  Polynomial derivative(int i) const;
  // Mixed partial of order j.
  Polynomial derivative(const MultiIndex& j) const;

  Polynomial pow(int exponent) const;
  Polynomial homogeneous_component(int degree) const;

 private:
  void check_same_dim(const Polynomial& other) const;

  int dim_;
  TermMap terms_;
};

Polynomial operator*(const Rational& scalar, const Polynomial& p);

// Canonical text form: terms in descending graded-lex order, each rendered as
// coefficient * x-powers joined by '*', e.g. "x1^2*x2 - 3/2*x3".
std::string to_string(const Polynomial& p);

}  // namespace sunstar
