#include "sunstar/fit.hpp"

namespace sunstar {

DiffOp fit_diffop(const std::function<Polynomial(const Polynomial&)>& probe,
                  int dim, int max_degree, int max_order,
                  bool admit_constant_term) {
  if (max_order < 0 || max_order > max_degree) {
    throw std::invalid_argument("fit_diffop requires 0 <= max_order <= max_degree");
  }
  DiffOp fitted(dim);
  for_each_multi_index(dim, max_order, [&](const MultiIndex& k) {
    const Polynomial x_k = Polynomial::monomial(k, 1);
    const Polynomial residual = probe(x_k) - fitted.apply(x_k);
    if (residual.is_zero()) {
      return;
    }
    if (k.is_zero() && !admit_constant_term) {
      throw std::invalid_argument(
          "fit_diffop probe does not annihilate constants");
    }
    fitted.add_term(k, residual * Rational(Integer(1), k.factorial_product()));
  });
  // Exactness check over the full probe range; degrees above max_order can
  // only pass when the probe really is an operator of order <= max_order.
  for_each_multi_index(dim, max_degree, [&](const MultiIndex& k) {
    const Polynomial x_k = Polynomial::monomial(k, 1);
    if (fitted.apply(x_k) != probe(x_k)) {
      throw FitError(
          "probe is not a differential operator of order <= " +
              std::to_string(max_order) + " on monomials of degree <= " +
              std::to_string(max_degree),
          k);
    }
  });
  return fitted;
}

}  // namespace sunstar
