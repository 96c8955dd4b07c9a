#pragma once

// The commutative product attached to a star-product: a monomial is split
// into its multiset of linear factors, the factors are multiplied with the
// star-product in every order, and the results are averaged.  The average
// is computed by a cyclic one-step recursion over the leading factor, which
// agrees with the full k!-permutation sum (kept here as an oracle).  The
// resulting product on nu-series depends only on the classical parts of its
// operands: nu-powers of the inputs are annihilated.

#include "sunstar/multi_index.hpp"
#include "sunstar/nu_series.hpp"
#include "sunstar/polynomial.hpp"
#include "sunstar/star_product.hpp"

#include <map>
#include <mutex>

namespace sunstar {

// Multiset of single-variable factors of a monomial: counts[i] is the
// multiplicity of x_{i+1}.  The empty multiset stands for the factorization
// of 1 and symmetrizes to 1.
struct FactorMultiset {
  MultiIndex counts;

  int factor_count() const { return counts.degree(); }
};

// Reinterprets a monomial exponent as factor multiplicities.
FactorMultiset lambda_factor(const MultiIndex& monomial);

class SunProduct {
 public:
  // All symmetrized values and products are truncated at truncation_order.
  SunProduct(StarProductPtr star, int truncation_order);

  int dim() const { return star_->dim(); }
  int order() const { return order_; }
  const StarProductPtr& star() const { return star_; }

  // Average of the star-products of the factors over all orderings,
  // memoized per multiset.  The reference stays valid for the lifetime of
  // this object.
  const NuSeries& symmetrized(const FactorMultiset& factors) const;

  // f (.) g: factor the classical part of fg and symmetrize each monomial.
  NuSeries mul(const NuSeries& f, const NuSeries& g) const;
  NuSeries mul(const Polynomial& f, const Polynomial& g) const;

 private:
  const NuSeries& symmetrized_locked(const MultiIndex& counts) const;

  StarProductPtr star_;
  int order_;
  mutable std::mutex mutex_;
  mutable std::map<MultiIndex, NuSeries, GradedLexLess> memo_;
};

// Brute-force reference: (1/k!) sum over all permutations of the factor
// word, each order folded with the star-product.  Exponential in the
// factor count; used to cross-check the cyclic recursion.
NuSeries symmetrized_star_oracle(const StarProduct& star, const FactorMultiset& factors,
                                 int order);

}  // namespace sunstar
