#include "sunstar/multi_index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sunstar {

MultiIndex::MultiIndex(int dim) : k_(static_cast<std::size_t>(dim), 0) {
  if (dim < 1) {
    throw std::invalid_argument("multi-index dimension must be >= 1");
  }
}

MultiIndex::MultiIndex(std::vector<int> exponents) : k_(std::move(exponents)) {
  if (k_.empty()) {
    throw std::invalid_argument("multi-index dimension must be >= 1");
  }
  for (int e : k_) {
    if (e < 0) {
      throw std::invalid_argument("multi-index exponents must be >= 0");
    }
  }
}

MultiIndex MultiIndex::unit(int dim, int i) {
  MultiIndex result(dim);
  if (i < 0 || i >= dim) {
    throw std::out_of_range("multi-index unit out of range");
  }
  result.k_[i] = 1;
  return result;
}

int MultiIndex::degree() const {
  return std::accumulate(k_.begin(), k_.end(), 0);
}

MultiIndex MultiIndex::plus(const MultiIndex& other) const {
  if (dim() != other.dim()) {
    throw std::invalid_argument("multi-index dimension mismatch");
  }
  MultiIndex result = *this;
  for (int i = 0; i < dim(); ++i) {
    result.k_[i] += other.k_[i];
  }
  return result;
}

std::optional<MultiIndex> MultiIndex::minus(const MultiIndex& other) const {
  if (dim() != other.dim()) {
    throw std::invalid_argument("multi-index dimension mismatch");
  }
  MultiIndex result = *this;
  for (int i = 0; i < dim(); ++i) {
    result.k_[i] -= other.k_[i];
    if (result.k_[i] < 0) {
      return std::nullopt;
    }
  }
  return result;
}

bool MultiIndex::contains(const MultiIndex& other) const {
  if (dim() != other.dim()) {
    throw std::invalid_argument("multi-index dimension mismatch");
  }
  for (int i = 0; i < dim(); ++i) {
    if (k_[i] < other.k_[i]) {
      return false;
    }
  }
  return true;
}

Integer MultiIndex::factorial_product() const {
  Integer result = 1;
  for (int e : k_) {
    result *= factorial(e);
  }
  return result;
}

Integer MultiIndex::falling_factorial(const MultiIndex& j) const {
  Integer result = 1;
  for (int i = 0; i < dim(); ++i) {
    if (j.k_[i] > k_[i]) {
      throw std::invalid_argument("falling_factorial requires contains(j)");
    }
    for (int t = k_[i] - j.k_[i] + 1; t <= k_[i]; ++t) {
      result *= t;
    }
  }
  return result;
}

Integer MultiIndex::binomial_product(const MultiIndex& j) const {
  Integer result = 1;
  for (int i = 0; i < dim(); ++i) {
    result *= binomial(k_[i], j.k_[i]);
  }
  return result;
}

bool graded_lex_less(const MultiIndex& a, const MultiIndex& b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) {
    return da < db;
  }
  return std::lexicographical_compare(a.exponents().begin(), a.exponents().end(),
                                      b.exponents().begin(), b.exponents().end());
}

namespace {

void enumerate(std::vector<int>& current, int position, int remaining,
               const std::function<void(const MultiIndex&)>& fn) {
  if (position == static_cast<int>(current.size()) - 1) {
    current[position] = remaining;
    fn(MultiIndex(current));
    current[position] = 0;
    return;
  }
  // Ascending leading exponent keeps the graded-lex order within each degree.
  for (int e = 0; e <= remaining; ++e) {
    current[position] = e;
    enumerate(current, position + 1, remaining - e, fn);
  }
  current[position] = 0;
}

}  // namespace

void for_each_multi_index(int dim, int max_degree,
                          const std::function<void(const MultiIndex&)>& fn) {
  std::vector<int> current(static_cast<std::size_t>(dim), 0);
  for (int d = 0; d <= max_degree; ++d) {
    enumerate(current, 0, d, fn);
  }
}

}  // namespace sunstar
