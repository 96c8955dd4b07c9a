#pragma once

// Cochains of the symmetrized product: the series rho with
// f (.) g = sum_r nu^r rho_r(fg) on classical inputs.  The raw table lists
// rho_r on monomials; the reconstruction turns each rho_r into an honest
// differential operator.  The operator is found from the bilinear map
//   phi_r(f,g) = -C_r(f,g) - sum_{a+b=r, a,b>=1} C_a(f, rho_b(g)),
// whose first-slot-linear components phi^{i,J} (|J| >= 1) determine
//   rho_r = - sum_{i,J} 1/(|J|+1) phi^{i,J} d_{J+e_i},
// and is validated against the raw table over its whole degree range.

#include "sunstar/diff_op.hpp"
#include "sunstar/multi_index.hpp"
#include "sunstar/polynomial.hpp"
#include "sunstar/star_product.hpp"
#include "sunstar/sun_product.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace sunstar {

class SunCochains {
 public:
  SunCochains(int dim, int order, int table_degree,
              std::map<MultiIndex, NuSeries, GradedLexLess> table);

  int dim() const { return dim_; }
  int order() const { return order_; }
  int table_degree() const { return table_degree_; }

  // rho_r(x^K) from the raw table; rho_0 is the identity.
  Polynomial value(int r, const MultiIndex& k) const;

  // Operators reconstructed so far; rho(r) is 1-based.
  int reconstructed_count() const { return static_cast<int>(rho_.size()); }
  const std::vector<DiffOp>& rho() const { return rho_; }
  const DiffOp& rho(int r) const;

  // Appends the operator for order reconstructed_count() + 1.
  void push_rho(const DiffOp& op);

 private:
  int dim_;
  int order_;
  int table_degree_;
  std::map<MultiIndex, NuSeries, GradedLexLess> table_;
  std::vector<DiffOp> rho_;
};

// Tabulates rho_r(x^K) for r <= order and |K| <= table_degree by
// symmetrizing every monomial.
SunCochains extract_sun_cochains(const SunProduct& sun, int order, int table_degree);

// The reconstructed operator disagrees with the raw table: the fit degree
// was too small for the operator's order, or the table is inconsistent.
class ReconstructionError : public std::runtime_error {
 public:
  ReconstructionError(const std::string& message, MultiIndex witness)
      : std::runtime_error(message), witness_(std::move(witness)) {}

  const MultiIndex& witness() const { return witness_; }

 private:
  MultiIndex witness_;
};

// Builds the differential operator for rho_r, requiring rho_1..rho_{r-1}
// to be reconstructed already.  fit_degree bounds both the probing degree
// and the operator order, and the result is validated on every table
// monomial of degree <= fit_degree.
DiffOp reconstruct_cochain_diffop(const StarProduct& star, const SunCochains& cochains,
                                  int r, int fit_degree);

// Reconstructs all remaining orders in place.
void reconstruct_all(const StarProduct& star, SunCochains& cochains, int fit_degree);

// Defect of the first-order coboundary relation
// (d rho_1)(f,g) = P(f,g) - C_1(f,g); zero for every star-product.
Polynomial first_cochain_coboundary_residual(const StarProduct& star, const DiffOp& rho1,
                                             const Polynomial& f, const Polynomial& g);

}  // namespace sunstar
