#pragma once

// Exact verification suites for star-products: associativity through a
// truncation order, covariance with respect to a Lie algebra, the
// exponential/Campbell-Hausdorff cochain identity on coefficient bins of
// formal parameters s and t, and the closed form of cochains on
// (linear, power-of-linear) pairs.  Failures are report outcomes carrying
// the first witness, never exceptions.

#include "sunstar/bch.hpp"
#include "sunstar/lie_algebra.hpp"
#include "sunstar/nu_series.hpp"
#include "sunstar/star_product.hpp"

#include <vector>

namespace sunstar {

struct AssociativityReport {
  bool pass;
  // First failing nu-order and the residual (f*g)*h - f*(g*h) there.
  int order;
  Polynomial residual;
};

AssociativityReport check_associativity(const StarProduct& star, const Polynomial& f,
                                        const Polynomial& g, const Polynomial& h, int order);

struct CovarianceWitness {
  int i;
  int j;
  NuSeries residual;
};

struct CovarianceReport {
  bool pass;
  std::vector<CovarianceWitness> witnesses;
};

// Checks x_i * x_j - x_j * x_i = 2 nu sum_k c_ij^k x_k for every pair,
// exactly through the given truncation order.
CovarianceReport check_covariance(const StarProduct& star, const LieAlgebra& algebra,
                                  int order);

struct ChsReport {
  bool pass;
  int r;
  int a;
  int b;
  Polynomial residual;
};

// Compares, bin by bin in the formal parameters s and t, the coefficient of
// s^a t^b (a + b <= max_degree) of C_r(exp(sX), exp(tY)) with that of
// F_r(sX, tY) exp(sX + tY), for r <= max_r.
ChsReport check_chs(const StarProduct& star, BchContext& bch, const LinearForm& x,
                    const LinearForm& y, int max_r, int max_degree);

struct EcoReport {
  bool pass;
  int r;
  int m;
  Polynomial residual;
};

// Checks C_r(X, Y^m) = 2^r B_r / r! * m!/(m-r)! * (ad_Y)^r(X) * Y^{m-r}
// for r <= min(m, max_r), m <= max_m.
EcoReport check_eco(const StarProduct& star, const LieAlgebra& algebra, const LinearForm& x,
                    const LinearForm& y, int max_r, int max_m);

}  // namespace sunstar
