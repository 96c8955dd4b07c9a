#pragma once

// Formal operator series T = I + sum_{r=1..R} nu^r T_r with each T_r a
// differential operator annihilating constants.  A series is an exact finite
// sum: terms beyond the stored order are zero, not unknown, so a series may be
// applied to nu-series of any truncation order.

#include "sunstar/diff_op.hpp"

#include <vector>

namespace sunstar {

class OperatorSeries {
 public:
  static OperatorSeries identity(int dim, int order);

  int dim() const { return dim_; }
  int order() const { return order_; }

  // T_r; zero beyond the stored order.
  const DiffOp& term(int r) const;
  // r >= 1 and op must annihilate constants.
  void set_term(int r, const DiffOp& op);

  // True when every T_r with r >= 1 annihilates linear monomials as well,
  // i.e. the series fixes every polynomial of degree <= 1.
  bool fixes_linear() const;

  NuSeries apply(const NuSeries& f) const;
  NuSeries apply(const Polynomial& f, int order) const;

  bool operator==(const OperatorSeries& other) const;
  bool operator!=(const OperatorSeries& other) const { return !(*this == other); }

 private:
  OperatorSeries(int dim, int order);

  int dim_;
  int order_;
  std::vector<DiffOp> terms_;
};

// (a ∘ b) truncated at the requested order.
OperatorSeries compose(const OperatorSeries& a, const OperatorSeries& b, int order);

// Composition inverse through the requested order: compose(t, inverse(t, R), R)
// is the identity series.
OperatorSeries inverse(const OperatorSeries& t, int order);

// exp(nu * d) truncated at the requested order: term r is d^r / r!.
OperatorSeries exp_series(const DiffOp& d, int order);

}  // namespace sunstar
