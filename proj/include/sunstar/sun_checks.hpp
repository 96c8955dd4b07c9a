#pragma once

// Membership and equivalence pipelines built on the symmetrized product:
// testing whether a star-product's sun-cochains vanish, twisting a star
// into (or out of) that class, the operator that trivializes any
// symmetrized product, and the weak/strong equivalence verifiers for pairs
// of symmetrized products.  Failures of mathematical guarantees throw;
// checks of candidate data return witness reports.

#include "sunstar/diff_op.hpp"
#include "sunstar/operator_series.hpp"
#include "sunstar/star_product.hpp"
#include "sunstar/sun_cochains.hpp"
#include "sunstar/sun_product.hpp"

#include <vector>

namespace sunstar {

struct InEpReport {
  bool pass;
  // First nonzero table entry: rho_r(x^K) = residual.
  int r;
  MultiIndex witness;
  Polynomial residual;
};

// True iff every sun-cochain value vanishes for r <= order on monomials of
// degree <= degree.
InEpReport check_in_EP(const StarProductPtr& star, int order, int degree);

struct EquivalenceToEp {
  OperatorSeries twist;
  StarProductPtr star_in_ep;
};

// T = I + sum nu^r rho_r and the star-product obtained by twisting with T,
// whose own sun-cochains vanish (verified up to (order, degree); a failure
// of that postcondition throws).
EquivalenceToEp equivalence_to_EP(const StarProductPtr& star, int order, int degree);

// The star-product equivalent to base whose sun-cochains are exactly the
// given operators.  Preconditions: base lies in the vanishing class, and
// every eta kills constants and linear polynomials.
StarProductPtr build_star_with_cochains(const StarProductPtr& base,
                                        const std::vector<DiffOp>& etas, int order);

// S = (I + sum nu^r rho_r)^{-1}, which maps f (.) g to the plain product
// of the classical parts.  The defining property is verified on all
// monomial pairs of total degree <= degree; a failure throws.
OperatorSeries weak_trivializer(const SunProduct& sun, int order, int degree);

struct WeakEquivalenceReport {
  bool pass;
  MultiIndex k;
  MultiIndex l;
  NuSeries residual;
};

// S(f (.)A g) = f (.)B g on monomial pairs of total degree <= degree,
// compared through nu^order.
WeakEquivalenceReport check_weak_equivalence(const SunProduct& a, const SunProduct& b,
                                             const OperatorSeries& s, int order, int degree);

struct StrongEquivalenceReport {
  bool pass;
  int t;
  MultiIndex k;
  MultiIndex l;
  Polynomial residual;
};

// Order-by-order form of the stronger relation, in which nu-powers
// produced by S survive on both sides:
//   sum_{r+s=t} S_r(rhoA_s(fg)) = sum_{r+a+b=t} rhoB_r(S_a(f) S_b(g))
// for t <= order, on monomial pairs of total degree <= degree.  Both
// cochain families are reconstructed internally.
StrongEquivalenceReport check_strong_equivalence(const SunProduct& a, const SunProduct& b,
                                                 const OperatorSeries& s, int order,
                                                 int degree);

struct MultiplicativityReport {
  bool pass;
  int t;
  MultiIndex k;
  MultiIndex l;
  Polynomial residual;
};

// Necessary condition for strong equivalence: S_t(fg) =
// sum_{a+b=t} S_a(f) S_b(g) for t <= order — S is an automorphism of the
// pointwise product, hence the exponential of a derivation series.
MultiplicativityReport check_strong_multiplicativity(const OperatorSeries& s, int order,
                                                     int degree);

}  // namespace sunstar
