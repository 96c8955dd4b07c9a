#pragma once

// Campbell-Hausdorff machinery evaluated in a concrete Lie algebra.  The
// homogeneous coefficients c_i of log(exp X exp Y) are computed by Dynkin's
// explicit formula over nested commutators, so c_1(X, Y) = X + Y and
// c_2(X, Y) = [X, Y] / 2.  On top of them sit the rescaled coefficients
// Z_r = 2^r c_{r+1} and the polynomial series F_r determined by F_0 = 1 and
// r F_r = sum_{k<r} (r - k) Z_{r-k} F_k, equivalently the partition
// expansion of exp(sum_m Z_m u^m); both paths are evaluated and must agree.

#include "sunstar/lie_algebra.hpp"
#include "sunstar/polynomial.hpp"
#include "sunstar/rational.hpp"

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace sunstar {

class BchContext {
 public:
  // max_order caps the admissible index of c_i (and z/f accordingly).
  explicit BchContext(LieAlgebra algebra, int max_order = 8);

  const LieAlgebra& algebra() const { return algebra_; }
  int max_order() const { return max_order_; }

  // c_i(X, Y) for i >= 1.
  LinearForm c(int i, const LinearForm& x, const LinearForm& y);
  // Split of c_i(sX, tY) by the power of s: entry a (for a = 0..i) is the
  // part of c_i with exactly a factors of X and i - a factors of Y, so
  // c_i = sum_a bins[a].  Exact stand-in for the formal parameters s, t.
  std::vector<LinearForm> c_bins(int i, const LinearForm& x, const LinearForm& y);
  // Z_r(X, Y) = 2^r c_{r+1}(X, Y) for r >= 0.
  LinearForm z(int r, const LinearForm& x, const LinearForm& y);
  std::vector<LinearForm> z_bins(int r, const LinearForm& x, const LinearForm& y);
  // F_r(X, Y) for r >= 0, a polynomial product of Z-values; throws
  // std::logic_error if the recursive and explicit evaluations disagree.
  Polynomial f_series(int r, const LinearForm& x, const LinearForm& y);

 private:
  using MemoKey = std::tuple<int, std::vector<Rational>, std::vector<Rational>>;

  LieAlgebra algebra_;
  int max_order_;
  std::mutex mu_;
  std::map<MemoKey, std::vector<LinearForm>> memo_;

  std::vector<LinearForm> compute_c_bins(int i, const LinearForm& x,
                                         const LinearForm& y) const;
};

}  // namespace sunstar
