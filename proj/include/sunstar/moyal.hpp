#pragma once

// The Moyal star-product of a constant Poisson structure:
// C_r(f, g) = (1/r!) sum P^{i1 j1} ... P^{ir jr} d_{i1..ir} f d_{j1..jr} g.
// The r-fold power of the bivector is collected into a table of derivative
// pairs (I, J) -> coefficient once per order and cached.

#include "sunstar/diff_op.hpp"
#include "sunstar/poisson.hpp"
#include "sunstar/star_product.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace sunstar {

class MoyalStar : public StarProduct {
 public:
  // Requires a constant Poisson structure.
  explicit MoyalStar(PoissonStructure poisson);

  int dim() const override { return poisson_.dim(); }
  const PoissonStructure& poisson() const override { return poisson_; }
  Polynomial cochain(int r, const Polynomial& f, const Polynomial& g) const override;

  // C_r as an explicit bidifferential operator (constant coefficients).
  BiDiffOp cochain_operator(int r) const;

 private:
  using PairTable = std::map<std::pair<MultiIndex, MultiIndex>, Rational, IndexPairGradedLexLess>;

  PoissonStructure poisson_;
  mutable std::mutex mu_;
  mutable std::vector<PairTable> tables_;  // tables_[r] = r-fold bivector power / r!

  const PairTable& table(int r) const;
};

}  // namespace sunstar
