#pragma once

// Differential operators with polynomial coefficients, acting on polynomials:
// A = sum_J a_J(x) d_J.  BiDiffOp is the bilinear analogue
// B(f,g) = sum_{I,J} b_{I,J}(x) d_I f d_J g; cochains of star-products and the
// auxiliary bilinear maps of the reconstruction live here.

#include "sunstar/nu_series.hpp"
#include "sunstar/polynomial.hpp"

#include <map>
#include <string>
#include <utility>

namespace sunstar {

class DiffOp {
 public:
  using TermMap = std::map<MultiIndex, Polynomial, GradedLexLess>;

  explicit DiffOp(int dim);
  static DiffOp identity(int dim);
  // coeff(x) * d_J
  static DiffOp term(const Polynomial& coeff, const MultiIndex& j);
  // d_J with coefficient 1
  static DiffOp partial(int dim, const MultiIndex& j);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  // Maximal |J| over stored terms; -1 for the zero operator.
  int order() const;
  // True when there is no J = 0 term, i.e. the operator kills constants.
  bool annihilates_constants() const;
  // True when the operator also kills every linear monomial.
  bool annihilates_linear() const;
  const TermMap& terms() const { return terms_; }

  void add_term(const MultiIndex& j, const Polynomial& coeff);

  Polynomial apply(const Polynomial& f) const;
  // Coefficientwise action on a series.
  NuSeries apply(const NuSeries& f) const;

  DiffOp operator-() const;
  DiffOp operator+(const DiffOp& other) const;
  DiffOp operator-(const DiffOp& other) const;
  DiffOp operator*(const Rational& scalar) const;
  DiffOp& operator+=(const DiffOp& other);

  bool operator==(const DiffOp& other) const;
  bool operator!=(const DiffOp& other) const { return !(*this == other); }

 private:
  int dim_;
  TermMap terms_;
};

// a after b, expanded to canonical form with the Leibniz rule.
DiffOp compose(const DiffOp& a, const DiffOp& b);

// Text form with derivative symbols d1..dn, e.g. "-x1*d2^3 + d1^2".
std::string to_string(const DiffOp& op);

struct IndexPairGradedLexLess {
  bool operator()(const std::pair<MultiIndex, MultiIndex>& a,
                  const std::pair<MultiIndex, MultiIndex>& b) const {
    if (a.first != b.first) {
      return graded_lex_less(a.first, b.first);
    }
    return graded_lex_less(a.second, b.second);
  }
};

class BiDiffOp {
 public:
  using TermMap =
      std::map<std::pair<MultiIndex, MultiIndex>, Polynomial, IndexPairGradedLexLess>;

  explicit BiDiffOp(int dim);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const MultiIndex& i, const MultiIndex& j, const Polynomial& coeff);

  Polynomial apply(const Polynomial& f, const Polynomial& g) const;

  BiDiffOp operator+(const BiDiffOp& other) const;
  BiDiffOp operator*(const Rational& scalar) const;

  bool operator==(const BiDiffOp& other) const;
  bool operator!=(const BiDiffOp& other) const { return !(*this == other); }

 private:
  int dim_;
  TermMap terms_;
};

}  // namespace sunstar
