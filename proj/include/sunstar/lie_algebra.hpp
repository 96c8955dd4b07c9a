#pragma once

// Finite-dimensional Lie algebras given by rational structure constants
// [e_i, e_j] = sum_k c_ij^k e_k, plus the linear forms sum_i a_i x_i they act
// on.  Linear forms double as elements of the algebra (coordinates in the
// basis e_i) and as degree-one polynomials on the dual space.

#include "sunstar/polynomial.hpp"
#include "sunstar/rational.hpp"

#include <string>
#include <vector>

namespace sunstar {

class LinearForm {
 public:
  // Zero form in the given dimension.
  explicit LinearForm(int dim);
  explicit LinearForm(std::vector<Rational> coefficients);
  // The basis form x_{i+1}, i.e. coefficient 1 in slot i.
  static LinearForm basis(int dim, int i);

  int dim() const { return static_cast<int>(coeffs_.size()); }
  const Rational& coeff(int i) const;
  void set_coeff(int i, const Rational& value);
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  // The degree-one polynomial sum_i a_i x_{i+1}.
  Polynomial to_polynomial() const;
  // Inverse of to_polynomial; rejects anything with a constant term or a
  // term of degree two or more.
  static LinearForm from_polynomial(const Polynomial& f);

  LinearForm operator-() const;
  LinearForm operator+(const LinearForm& other) const;
  LinearForm operator-(const LinearForm& other) const;
  LinearForm operator*(const Rational& scalar) const;
  LinearForm& operator+=(const LinearForm& other);

  bool operator==(const LinearForm& other) const { return coeffs_ == other.coeffs_; }
  bool operator!=(const LinearForm& other) const { return !(*this == other); }

 private:
  std::vector<Rational> coeffs_;
};

std::string to_string(const LinearForm& form);

class LieAlgebra {
 public:
  // One declared bracket component: [e_i, e_j] has coefficient `value` on
  // e_k.  Indices are zero-based and must satisfy i < j; the mirrored
  // constant c_ji^k = -c_ij^k is filled in automatically.
  struct StructureEntry {
    int i;
    int j;
    int k;
    Rational value;
  };

  // Validates index ranges, rejects duplicate (i, j, k) declarations, and
  // checks the Jacobi identity for the resulting constants; throws
  // std::invalid_argument naming the first failing triple.
  LieAlgebra(int dim, const std::vector<StructureEntry>& entries);

  static LieAlgebra abelian(int dim);
  // dim 3, [e1, e2] = e3, e3 central.
  static LieAlgebra heisenberg();
  // dim 3, cyclic: [e1, e2] = e3, [e2, e3] = e1, [e3, e1] = e2.
  static LieAlgebra su2();

  int dim() const { return dim_; }
  // Coefficient of e_k in [e_i, e_j].
  const Rational& c(int i, int j, int k) const;

  LinearForm bracket(const LinearForm& x, const LinearForm& y) const;
  // (ad_y)^r applied to x, where ad_y : x -> [y, x].
  LinearForm ad_power(const LinearForm& y, int r, const LinearForm& x) const;

 private:
  int dim_;
  std::vector<Rational> constants_;  // dense, index (i * dim + j) * dim + k

  Rational& c_mutable(int i, int j, int k);
};

}  // namespace sunstar
