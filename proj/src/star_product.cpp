#include "sunstar/star_product.hpp"

#include <stdexcept>

namespace sunstar {

NuSeries StarProduct::mul(const NuSeries& a, const NuSeries& b) const {
  if (a.dim() != dim() || b.dim() != dim()) {
    throw std::invalid_argument("series dimension does not match the star-product");
  }
  if (a.order() != b.order()) {
    throw std::invalid_argument("series truncation order mismatch");
  }
  const int order = a.order();
  NuSeries result(dim(), order);
  for (int t = 0; t <= order; ++t) {
    Polynomial sum(dim());
    for (int r = 0; r <= t; ++r) {
      for (int s = 0; r + s <= t; ++s) {
        const int u = t - r - s;
        if (a.coeff(s).is_zero() || b.coeff(u).is_zero()) {
          continue;
        }
        sum += cochain(r, a.coeff(s), b.coeff(u));
      }
    }
    result.set_coeff(t, sum);
  }
  return result;
}

NuSeries StarProduct::mul(const Polynomial& f, const Polynomial& g, int order) const {
  return mul(NuSeries::from_polynomial(f, order), NuSeries::from_polynomial(g, order));
}

NuSeries star_power(const StarProduct& star, const Polynomial& f, int m, int order) {
  if (m < 0) {
    throw std::invalid_argument("star power exponent must be non-negative");
  }
  NuSeries result = NuSeries::from_polynomial(
      Polynomial::constant(star.dim(), Rational(1)), order);
  for (int step = 0; step < m; ++step) {
    result = star.mul(NuSeries::from_polynomial(f, order), result);
  }
  return result;
}

}  // namespace sunstar
