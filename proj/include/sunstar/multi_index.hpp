#pragma once

// Exponent / derivative multi-indices over a fixed dimension n.  A MultiIndex
// doubles as a monomial exponent vector and as a mixed-partial order; the
// canonical term order everywhere in the library is graded lexicographic.

#include "sunstar/rational.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace sunstar {

class MultiIndex {
 public:
  explicit MultiIndex(int dim);
  explicit MultiIndex(std::vector<int> exponents);
  // Braced lists always mean exponents, never a dimension: MultiIndex({2})
  // is the one-variable index with exponent 2.
  MultiIndex(std::initializer_list<int> exponents)
      : MultiIndex(std::vector<int>(exponents)) {}

  // e_i for 0-based variable index i.
  static MultiIndex unit(int dim, int i);

  int dim() const { return static_cast<int>(k_.size()); }
  int degree() const;
  bool is_zero() const { return degree() == 0; }

  int operator[](int i) const { return k_[i]; }
  const std::vector<int>& exponents() const { return k_; }

  MultiIndex plus(const MultiIndex& other) const;
  // Componentwise difference; empty when any component would go negative.
  std::optional<MultiIndex> minus(const MultiIndex& other) const;
  // Componentwise >=.
  bool contains(const MultiIndex& other) const;

  // K! = prod k_i!
  Integer factorial_product() const;
  // K!/(K-J)! = prod k_i!/(k_i - j_i)!; requires contains(J).
  Integer falling_factorial(const MultiIndex& j) const;
  // prod binom(k_i, j_i); requires contains(J).
  Integer binomial_product(const MultiIndex& j) const;

  bool operator==(const MultiIndex& other) const { return k_ == other.k_; }
  bool operator!=(const MultiIndex& other) const { return k_ != other.k_; }

 private:
  std::vector<int> k_;
};

// Graded lexicographic order: first by total degree, ties by lexicographic
// comparison of the exponent vectors.
bool graded_lex_less(const MultiIndex& a, const MultiIndex& b);

struct GradedLexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    return graded_lex_less(a, b);
  }
};

// Invokes fn on every multi-index of dimension dim with degree <= max_degree,
// in graded lexicographic order.
void for_each_multi_index(int dim, int max_degree,
                          const std::function<void(const MultiIndex&)>& fn);

}  // namespace sunstar
