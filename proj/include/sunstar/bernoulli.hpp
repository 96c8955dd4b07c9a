#pragma once

// First-kind Bernoulli numbers (B_1 = -1/2) through the defining recurrence
// sum_{k=0}^{n} binom(n+1, k) B_k = 0 with B_0 = 1.

#include "sunstar/rational.hpp"

#include <mutex>
#include <vector>

namespace sunstar {

class BernoulliCache {
 public:
  // B_n; thread-safe, memoized.  Throws std::invalid_argument for n < 0.
  Rational get(int n);

 private:
  std::mutex mu_;
  std::vector<Rational> memo_;
};

// B_n from a process-wide shared cache.
Rational bernoulli(int n);

}  // namespace sunstar
