#include "sunstar/sun_product.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sunstar {

FactorMultiset lambda_factor(const MultiIndex& monomial) { return FactorMultiset{monomial}; }

SunProduct::SunProduct(StarProductPtr star, int truncation_order)
    : star_(std::move(star)), order_(truncation_order) {
  if (!star_) {
    throw std::invalid_argument("sun product requires a star product");
  }
  if (order_ < 0) {
    throw std::invalid_argument("truncation order must be nonnegative");
  }
}

const NuSeries& SunProduct::symmetrized(const FactorMultiset& factors) const {
  if (factors.counts.dim() != dim()) {
    throw std::invalid_argument("factor multiset dimension mismatch");
  }
  std::lock_guard<std::mutex> lock(mutex_);
  return symmetrized_locked(factors.counts);
}

// value(K) = (1/k) sum_i K_i x_i * value(K - e_i): the average over all
// factor orders, grouped by which factor comes first.
const NuSeries& SunProduct::symmetrized_locked(const MultiIndex& counts) const {
  const auto it = memo_.find(counts);
  if (it != memo_.end()) {
    return it->second;
  }
  NuSeries value(dim(), order_);
  const int k = counts.degree();
  if (k == 0) {
    value.set_coeff(0, Polynomial::constant(dim(), Rational(1)));
  } else {
    for (int i = 0; i < dim(); ++i) {
      if (counts[i] == 0) {
        continue;
      }
      const NuSeries& rest = symmetrized_locked(*counts.minus(MultiIndex::unit(dim(), i)));
      const NuSeries factor = NuSeries::from_polynomial(Polynomial::variable(dim(), i), order_);
      value += star_->mul(factor, rest) * Rational(counts[i], k);
    }
  }
  return memo_.emplace(counts, std::move(value)).first->second;
}

NuSeries SunProduct::mul(const NuSeries& f, const NuSeries& g) const {
  if (f.dim() != dim() || g.dim() != dim()) {
    throw std::invalid_argument("sun product dimension mismatch");
  }
  const Polynomial classical = f.project() * g.project();
  NuSeries result(dim(), order_);
  for (const auto& [k, coeff] : classical.terms()) {
    result += symmetrized(FactorMultiset{k}) * coeff;
  }
  return result;
}

NuSeries SunProduct::mul(const Polynomial& f, const Polynomial& g) const {
  return mul(NuSeries::from_polynomial(f, order_), NuSeries::from_polynomial(g, order_));
}

NuSeries symmetrized_star_oracle(const StarProduct& star, const FactorMultiset& factors,
                                 int order) {
  const int dim = factors.counts.dim();
  if (dim != star.dim()) {
    throw std::invalid_argument("factor multiset dimension mismatch");
  }
  const int k = factors.factor_count();
  if (k == 0) {
    return NuSeries::from_polynomial(Polynomial::constant(dim, Rational(1)), order);
  }
  std::vector<int> word;
  for (int i = 0; i < dim; ++i) {
    word.insert(word.end(), factors.counts[i], i);
  }
  NuSeries sum(dim, order);
  long permutations = 0;
  do {
    NuSeries value =
        NuSeries::from_polynomial(Polynomial::variable(dim, word.back()), order);
    for (int pos = static_cast<int>(word.size()) - 2; pos >= 0; --pos) {
      value = star.mul(NuSeries::from_polynomial(Polynomial::variable(dim, word[pos]), order),
                       value);
    }
    sum += value;
    ++permutations;
  } while (std::next_permutation(word.begin(), word.end()));
  return sum * Rational(1, permutations);
}

}  // namespace sunstar
