#pragma once

// Poisson structures on R^n: an antisymmetric matrix of polynomial entries
// P^{ij}(x) with the Jacobi identity enforced at construction.  The bracket
// is P(f, g) = sum_{i,j} P^{ij} d_i f d_j g.  Constant matrices and the
// linear matrices induced by Lie algebra structure constants are the two
// cases the products downstream are built on.

#include "sunstar/lie_algebra.hpp"
#include "sunstar/polynomial.hpp"

#include <vector>

namespace sunstar {

struct JacobiReport {
  bool pass;
  // First failing triple (zero-based, i < j < k) and the non-zero cyclic
  // sum at that triple; only meaningful when pass is false.
  int i = -1;
  int j = -1;
  int k = -1;
  Polynomial residual;
};

// Evaluates sum_l (P^{il} d_l P^{jk} + P^{jl} d_l P^{ki} + P^{kl} d_l P^{ij})
// for every triple i < j < k.  The matrix must be square and antisymmetric
// with matching entry dimensions (std::invalid_argument otherwise); a Jacobi
// failure is reported, not thrown.
JacobiReport jacobi_check(const std::vector<std::vector<Polynomial>>& matrix);

class PoissonStructure {
 public:
  // Validates antisymmetry and the Jacobi identity; throws
  // std::invalid_argument naming the first failing triple.
  explicit PoissonStructure(std::vector<std::vector<Polynomial>> matrix);

  static PoissonStructure constant(const std::vector<std::vector<Rational>>& matrix);
  // Even dimension 2m, P^{2a-1,2a} = 1 for a = 1..m.
  static PoissonStructure standard_symplectic(int dim);
  // P^{ij} = sum_k c_ij^k x_k from the structure constants.
  static PoissonStructure from_lie(const LieAlgebra& algebra);

  int dim() const { return dim_; }
  const Polynomial& entry(int i, int j) const;
  // True when every entry is a constant polynomial.
  bool is_constant() const;
  // Constant value of entry (i, j); std::logic_error when not constant.
  Rational constant_entry(int i, int j) const;

  Polynomial bracket(const Polynomial& f, const Polynomial& g) const;

 private:
  int dim_;
  std::vector<std::vector<Polynomial>> matrix_;
};

}  // namespace sunstar
