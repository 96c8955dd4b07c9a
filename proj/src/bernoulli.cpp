#include "sunstar/bernoulli.hpp"

#include <stdexcept>

namespace sunstar {

Rational BernoulliCache::get(int n) {
  if (n < 0) {
    throw std::invalid_argument("Bernoulli index must be non-negative");
  }
  std::lock_guard<std::mutex> lock(mu_);
  if (memo_.empty()) {
    memo_.push_back(Rational(1));
  }
  while (static_cast<int>(memo_.size()) <= n) {
    const int m = static_cast<int>(memo_.size());
    Rational sum(0);
    for (int k = 0; k < m; ++k) {
      sum += Rational(binomial(m + 1, k)) * memo_[static_cast<std::size_t>(k)];
    }
    memo_.push_back(-sum / Rational(m + 1));
  }
  return memo_[static_cast<std::size_t>(n)];
}

Rational bernoulli(int n) {
  static BernoulliCache cache;
  return cache.get(n);
}

}  // namespace sunstar
