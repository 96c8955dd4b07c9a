#pragma once

// Equivalence twists of star-products.  For an operator series
// T = I + sum nu^r T_r with each T_r null on constants, the twisted product
// is f *' g = T^{-1}(T(f) * T(g)), so that T(f *' g) = T(f) * T(g).  The
// twist keeps the Poisson structure: the order-one correction is a
// Hochschild coboundary, which is symmetric.  CochainStar perturbs chosen
// cochains of a base product directly; the perturbed family usually fails
// the product axioms, which is what the negative checker tests need.

#include "sunstar/diff_op.hpp"
#include "sunstar/operator_series.hpp"
#include "sunstar/star_product.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

namespace sunstar {

class TwistedStar : public StarProduct {
 public:
  TwistedStar(StarProductPtr base, OperatorSeries twist);

  int dim() const override { return base_->dim(); }
  const PoissonStructure& poisson() const override { return base_->poisson(); }
  const StarProduct& base() const { return *base_; }
  const OperatorSeries& twist() const { return twist_; }

  Polynomial cochain(int r, const Polynomial& f, const Polynomial& g) const override;
  // Direct conjugation, bypassing the per-pair cochain cache.
  NuSeries mul(const NuSeries& a, const NuSeries& b) const override;

 private:
  StarProductPtr base_;
  OperatorSeries twist_;

  mutable std::mutex mu_;
  mutable std::optional<OperatorSeries> inverse_;
  mutable std::map<std::pair<MultiIndex, MultiIndex>, std::vector<Polynomial>,
                   IndexPairGradedLexLess>
      pair_memo_;

  OperatorSeries inverse_copy(int order) const;
  std::vector<Polynomial> pair_values(const MultiIndex& k, const MultiIndex& l,
                                      int order) const;
};

// The star-product *' with T(f *' g) = T(f) * T(g).
StarProductPtr apply_equivalence(const OperatorSeries& twist, StarProductPtr base);

// A base product with explicit bidifferential perturbations added to chosen
// cochain orders: C'_r = C_r + delta[r].
class CochainStar : public StarProduct {
 public:
  CochainStar(StarProductPtr base, std::map<int, BiDiffOp> deltas);

  int dim() const override { return base_->dim(); }
  const PoissonStructure& poisson() const override { return base_->poisson(); }
  Polynomial cochain(int r, const Polynomial& f, const Polynomial& g) const override;

 private:
  StarProductPtr base_;
  std::map<int, BiDiffOp> deltas_;
};

}  // namespace sunstar
