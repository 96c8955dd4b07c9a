#include "sunstar/twist.hpp"

#include <stdexcept>

namespace sunstar {

TwistedStar::TwistedStar(StarProductPtr base, OperatorSeries twist)
    : base_(std::move(base)), twist_(std::move(twist)) {
  if (base_ == nullptr) {
    throw std::invalid_argument("twist requires a base star-product");
  }
  if (twist_.dim() != base_->dim()) {
    throw std::invalid_argument("twist dimension does not match the base star-product");
  }
}

OperatorSeries TwistedStar::inverse_copy(int order) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!inverse_.has_value() || inverse_->order() < order) {
    inverse_ = inverse(twist_, order);
  }
  return *inverse_;
}

NuSeries TwistedStar::mul(const NuSeries& a, const NuSeries& b) const {
  const NuSeries product = base_->mul(twist_.apply(a), twist_.apply(b));
  return inverse_copy(product.order()).apply(product);
}

std::vector<Polynomial> TwistedStar::pair_values(const MultiIndex& k, const MultiIndex& l,
                                                 int order) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    const auto it = pair_memo_.find(std::make_pair(k, l));
    if (it != pair_memo_.end() && static_cast<int>(it->second.size()) > order) {
      return it->second;
    }
  }
  const NuSeries series = mul(NuSeries::from_polynomial(Polynomial::monomial(k, Rational(1)), order),
                              NuSeries::from_polynomial(Polynomial::monomial(l, Rational(1)), order));
  std::vector<Polynomial> values;
  values.reserve(static_cast<std::size_t>(order) + 1);
  for (int r = 0; r <= order; ++r) {
    values.push_back(series.coeff(r));
  }
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = pair_memo_.emplace(std::make_pair(k, l), values);
  if (!inserted && it->second.size() < values.size()) {
    it->second = values;
  }
  return it->second;
}

Polynomial TwistedStar::cochain(int r, const Polynomial& f, const Polynomial& g) const {
  if (r < 0) {
    throw std::invalid_argument("cochain order must be non-negative");
  }
  if (f.dim() != dim() || g.dim() != dim()) {
    throw std::invalid_argument("polynomial dimension does not match the star-product");
  }
  Polynomial result(dim());
  for (const auto& [k, cf] : f.terms()) {
    for (const auto& [l, cg] : g.terms()) {
      const std::vector<Polynomial> values = pair_values(k, l, r);
      result += values[static_cast<std::size_t>(r)] * (cf * cg);
    }
  }
  return result;
}

StarProductPtr apply_equivalence(const OperatorSeries& twist, StarProductPtr base) {
  return std::make_shared<TwistedStar>(std::move(base), twist);
}

CochainStar::CochainStar(StarProductPtr base, std::map<int, BiDiffOp> deltas)
    : base_(std::move(base)), deltas_(std::move(deltas)) {
  if (base_ == nullptr) {
    throw std::invalid_argument("cochain perturbation requires a base star-product");
  }
  for (const auto& [r, op] : deltas_) {
    if (r < 1) {
      throw std::invalid_argument("cochain perturbations start at order 1");
    }
    if (op.dim() != base_->dim()) {
      throw std::invalid_argument("cochain perturbation dimension mismatch");
    }
  }
}

Polynomial CochainStar::cochain(int r, const Polynomial& f, const Polynomial& g) const {
  Polynomial result = base_->cochain(r, f, g);
  const auto it = deltas_.find(r);
  if (it != deltas_.end()) {
    result += it->second.apply(f, g);
  }
  return result;
}

}  // namespace sunstar
