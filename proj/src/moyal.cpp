#include "sunstar/moyal.hpp"

#include <stdexcept>

namespace sunstar {

MoyalStar::MoyalStar(PoissonStructure poisson) : poisson_(std::move(poisson)) {
  if (!poisson_.is_constant()) {
    throw std::invalid_argument("Moyal product requires a constant Poisson structure");
  }
  PairTable unit;
  unit.emplace(std::make_pair(MultiIndex(dim()), MultiIndex(dim())), Rational(1));
  tables_.push_back(std::move(unit));
}

const MoyalStar::PairTable& MoyalStar::table(int r) const {
  std::lock_guard<std::mutex> lock(mu_);
  while (static_cast<int>(tables_.size()) <= r) {
    const PairTable& prev = tables_.back();
    const int step = static_cast<int>(tables_.size());
    PairTable next;
    for (const auto& [pair, coeff] : prev) {
      for (int i = 0; i < dim(); ++i) {
        for (int j = 0; j < dim(); ++j) {
          const Rational p = poisson_.constant_entry(i, j);
          if (p == 0) {
            continue;
          }
          const auto key = std::make_pair(pair.first.plus(MultiIndex::unit(dim(), i)),
                                          pair.second.plus(MultiIndex::unit(dim(), j)));
          // Dividing the running product by the step index accumulates 1/r!.
          auto [it, inserted] = next.emplace(key, Rational(0));
          it->second += coeff * p / Rational(step);
          if (it->second == 0) {
            next.erase(it);
          }
        }
      }
    }
    tables_.push_back(std::move(next));
  }
  return tables_[static_cast<std::size_t>(r)];
}

Polynomial MoyalStar::cochain(int r, const Polynomial& f, const Polynomial& g) const {
  if (r < 0) {
    throw std::invalid_argument("cochain order must be non-negative");
  }
  if (f.dim() != dim() || g.dim() != dim()) {
    throw std::invalid_argument("polynomial dimension does not match the star-product");
  }
  if (r > f.degree() || r > g.degree()) {
    return Polynomial(dim());
  }
  Polynomial result(dim());
  for (const auto& [pair, coeff] : table(r)) {
    const Polynomial df = f.derivative(pair.first);
    if (df.is_zero()) {
      continue;
    }
    const Polynomial dg = g.derivative(pair.second);
    if (dg.is_zero()) {
      continue;
    }
    result += df * dg * coeff;
  }
  return result;
}

BiDiffOp MoyalStar::cochain_operator(int r) const {
  BiDiffOp op(dim());
  for (const auto& [pair, coeff] : table(r)) {
    op.add_term(pair.first, pair.second, Polynomial::constant(dim(), coeff));
  }
  return op;
}

}  // namespace sunstar
