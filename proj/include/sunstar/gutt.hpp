#pragma once

// The star-product on the dual of a Lie algebra, computed through the
// universal enveloping algebra: polynomials are symmetrized into ordered
// PBW monomials e1^{k1}...en^{kn}, multiplied there by commutator
// rewriting, and the product is decomposed back degree by degree.  The
// degree-(p+q-r) slice, rescaled by 2^r, is the cochain C_r.

#include "sunstar/diff_op.hpp"
#include "sunstar/lie_algebra.hpp"
#include "sunstar/multi_index.hpp"
#include "sunstar/poisson.hpp"
#include "sunstar/polynomial.hpp"
#include "sunstar/star_product.hpp"

#include <map>
#include <mutex>
#include <string>
#include <utility>

namespace sunstar {

// An element of the enveloping algebra in the ordered basis: a finite
// rational combination of monomials e1^{k1}...en^{kn}.
class PbwElement {
 public:
  using TermMap = std::map<MultiIndex, Rational, GradedLexLess>;

  explicit PbwElement(int dim);
  static PbwElement one(int dim);
  static PbwElement generator(int dim, int i);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  // Maximal monomial length; -1 when zero.
  int degree() const;
  const TermMap& terms() const { return terms_; }

  void add_term(const MultiIndex& k, const Rational& coeff);

  PbwElement operator+(const PbwElement& other) const;
  PbwElement operator-(const PbwElement& other) const;
  PbwElement operator*(const Rational& scalar) const;
  PbwElement& operator+=(const PbwElement& other);

  bool operator==(const PbwElement& other) const;
  bool operator!=(const PbwElement& other) const { return !(*this == other); }

 private:
  int dim_;
  TermMap terms_;
};

// Text form with generators e1..en, e.g. "e1*e2 - 1/2*e3".
std::string to_string(const PbwElement& u);

struct GeneratorIndexLess {
  bool operator()(const std::pair<int, MultiIndex>& a,
                  const std::pair<int, MultiIndex>& b) const {
    if (a.first != b.first) {
      return a.first < b.first;
    }
    return graded_lex_less(a.second, b.second);
  }
};

class GuttStar : public StarProduct {
 public:
  explicit GuttStar(LieAlgebra algebra);

  int dim() const override { return algebra_.dim(); }
  const PoissonStructure& poisson() const override { return poisson_; }
  const LieAlgebra& algebra() const { return algebra_; }

  Polynomial cochain(int r, const Polynomial& f, const Polynomial& g) const override;

  // Ordered normal form of e_i * u.
  PbwElement left_multiply(int i, const PbwElement& u) const;
  PbwElement multiply(const PbwElement& u, const PbwElement& v) const;
  // Symmetrization of x^K: the average over all orderings of the factor
  // word, in normal form.  Extends linearly to polynomials.
  PbwElement symmetrize(const MultiIndex& k) const;
  PbwElement symmetrize(const Polynomial& f) const;
  // The unique polynomials p_d with u = sum_d symmetrize(p_d), found by
  // top-degree triangular elimination.
  std::map<int, Polynomial> decompose(const PbwElement& u) const;

 private:
  LieAlgebra algebra_;
  PoissonStructure poisson_;

  mutable std::mutex mu_;
  // Normal form of e_i * e^L, the only expensive rewriting step.
  mutable std::map<std::pair<int, MultiIndex>, PbwElement, GeneratorIndexLess> leftmul_memo_;
  mutable std::map<MultiIndex, PbwElement, GradedLexLess> symmetrize_memo_;
  // Degree slices of symmetrize(x^K) * symmetrize(x^L), shared by all
  // cochain orders.
  mutable std::map<std::pair<MultiIndex, MultiIndex>, std::map<int, Polynomial>,
                   IndexPairGradedLexLess>
      pair_memo_;

  // The _locked helpers assume mu_ is held by the caller.
  PbwElement left_multiply_monomial(int i, const MultiIndex& l) const;
  PbwElement left_multiply_locked(int i, const PbwElement& u) const;
  PbwElement multiply_locked(const PbwElement& u, const PbwElement& v) const;
  PbwElement symmetrize_locked(const MultiIndex& k) const;
  std::map<int, Polynomial> decompose_locked(const PbwElement& u) const;
  const std::map<int, Polynomial>& pair_decomposition(const MultiIndex& k,
                                                      const MultiIndex& l) const;
};

}  // namespace sunstar
