#pragma once

// The star-product interface: a family of bilinear cochains C_r with
// C_0(f, g) = f g, C_r vanishing on constants for r >= 1, and the
// antisymmetric part of C_1 equal to twice the underlying Poisson bracket.
// The product of truncated series is assembled from the cochains,
// (a * b)_t = sum_{r+s+u=t} C_r(a_s, b_u).

#include "sunstar/nu_series.hpp"
#include "sunstar/poisson.hpp"
#include "sunstar/polynomial.hpp"

#include <memory>

namespace sunstar {

class StarProduct {
 public:
  virtual ~StarProduct() = default;

  virtual int dim() const = 0;
  virtual const PoissonStructure& poisson() const = 0;
  // C_r(f, g); exact, bilinear.
  virtual Polynomial cochain(int r, const Polynomial& f, const Polynomial& g) const = 0;

  // Product of truncated series, exact through the common truncation order.
  virtual NuSeries mul(const NuSeries& a, const NuSeries& b) const;
  // Convenience: product of two polynomials as a series of the given order.
  NuSeries mul(const Polynomial& f, const Polynomial& g, int order) const;
};

using StarProductPtr = std::shared_ptr<const StarProduct>;

// f * f * ... * f (m factors) as a series of the given order; m = 0 gives 1.
NuSeries star_power(const StarProduct& star, const Polynomial& f, int m, int order);

}  // namespace sunstar
