#include "sunstar/operator_series.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace sunstar {

namespace {

// Stable zero operator per dimension, for term lookups beyond the stored
// order.  std::map node references survive later insertions.
const DiffOp& zero_op(int dim) {
  static std::mutex mutex;
  static std::map<int, DiffOp> zeros;
  const std::lock_guard<std::mutex> lock(mutex);
  const auto it = zeros.find(dim);
  if (it != zeros.end()) {
    return it->second;
  }
  return zeros.emplace(dim, DiffOp(dim)).first->second;
}

}  // namespace

OperatorSeries::OperatorSeries(int dim, int order) : dim_(dim), order_(order) {
  if (order < 0) {
    throw std::invalid_argument("operator series order must be >= 0");
  }
  terms_.assign(static_cast<std::size_t>(order) + 1, DiffOp(dim));
  terms_[0] = DiffOp::identity(dim);
}

OperatorSeries OperatorSeries::identity(int dim, int order) {
  return OperatorSeries(dim, order);
}

const DiffOp& OperatorSeries::term(int r) const {
  if (r < 0) {
    throw std::out_of_range("operator series term index out of range");
  }
  if (r > order_) {
    return zero_op(dim_);
  }
  return terms_[static_cast<std::size_t>(r)];
}

void OperatorSeries::set_term(int r, const DiffOp& op) {
  if (r < 1 || r > order_) {
    throw std::out_of_range("operator series term index out of range");
  }
  if (op.dim() != dim_) {
    throw std::invalid_argument("operator series term dimension mismatch");
  }
  if (!op.annihilates_constants()) {
    throw std::invalid_argument("operator series terms must annihilate constants");
  }
  terms_[static_cast<std::size_t>(r)] = op;
}

bool OperatorSeries::fixes_linear() const {
  for (int r = 1; r <= order_; ++r) {
    if (!terms_[static_cast<std::size_t>(r)].annihilates_linear()) {
      return false;
    }
  }
  return true;
}

NuSeries OperatorSeries::apply(const NuSeries& f) const {
  if (f.dim() != dim_) {
    throw std::invalid_argument("operator series dimension mismatch");
  }
  NuSeries result(dim_, f.order());
  for (int t = 0; t <= f.order(); ++t) {
    Polynomial acc(dim_);
    for (int r = 0; r <= std::min(t, order_); ++r) {
      if (terms_[static_cast<std::size_t>(r)].is_zero()) {
        continue;
      }
      acc += terms_[static_cast<std::size_t>(r)].apply(f.coeff(t - r));
    }
    result.set_coeff(t, acc);
  }
  return result;
}

NuSeries OperatorSeries::apply(const Polynomial& f, int order) const {
  return apply(NuSeries::from_polynomial(f, order));
}

bool OperatorSeries::operator==(const OperatorSeries& other) const {
  if (dim_ != other.dim_) {
    return false;
  }
  const int top = std::max(order_, other.order_);
  for (int r = 0; r <= top; ++r) {
    if (term(r) != other.term(r)) {
      return false;
    }
  }
  return true;
}

OperatorSeries compose(const OperatorSeries& a, const OperatorSeries& b, int order) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("operator series dimension mismatch");
  }
  OperatorSeries result = OperatorSeries::identity(a.dim(), order);
  for (int t = 1; t <= order; ++t) {
    DiffOp acc(a.dim());
    for (int r = 0; r <= t; ++r) {
      const DiffOp& ar = a.term(r);
      const DiffOp& bs = b.term(t - r);
      if (ar.is_zero() || bs.is_zero()) {
        continue;
      }
      acc += compose(ar, bs);
    }
    result.set_term(t, acc);
  }
  return result;
}

OperatorSeries inverse(const OperatorSeries& t, int order) {
  OperatorSeries result = OperatorSeries::identity(t.dim(), order);
  // U_0 = I, U_t = -sum_{s=1..t} T_s U_{t-s} makes (T U)_t vanish for t >= 1.
  for (int k = 1; k <= order; ++k) {
    DiffOp acc(t.dim());
    for (int s = 1; s <= k; ++s) {
      const DiffOp& ts = t.term(s);
      if (ts.is_zero()) {
        continue;
      }
      acc += compose(ts, result.term(k - s));
    }
    result.set_term(k, -acc);
  }
  return result;
}

OperatorSeries exp_series(const DiffOp& d, int order) {
  if (!d.annihilates_constants()) {
    throw std::invalid_argument("exp_series argument must annihilate constants");
  }
  OperatorSeries result = OperatorSeries::identity(d.dim(), order);
  DiffOp power = DiffOp::identity(d.dim());
  Rational inv_factorial = 1;
  for (int r = 1; r <= order; ++r) {
    power = compose(power, d);
    inv_factorial /= r;
    result.set_term(r, power * inv_factorial);
  }
  return result;
}

}  // namespace sunstar
