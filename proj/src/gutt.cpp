#include "sunstar/gutt.hpp"

#include "term_render.hpp"

#include <stdexcept>
#include <utility>

namespace sunstar {

PbwElement::PbwElement(int dim) : dim_(dim) {
  if (dim <= 0) {
    throw std::invalid_argument("enveloping algebra dimension must be positive");
  }
}

PbwElement PbwElement::one(int dim) {
  PbwElement u(dim);
  u.add_term(MultiIndex(dim), Rational(1));
  return u;
}

PbwElement PbwElement::generator(int dim, int i) {
  PbwElement u(dim);
  u.add_term(MultiIndex::unit(dim, i), Rational(1));
  return u;
}

int PbwElement::degree() const {
  if (terms_.empty()) {
    return -1;
  }
  return terms_.rbegin()->first.degree();
}

void PbwElement::add_term(const MultiIndex& k, const Rational& coeff) {
  if (k.dim() != dim_) {
    throw std::invalid_argument("enveloping algebra term dimension mismatch");
  }
  if (coeff == 0) {
    return;
  }
  auto [it, inserted] = terms_.emplace(k, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

PbwElement PbwElement::operator+(const PbwElement& other) const {
  PbwElement result = *this;
  result += other;
  return result;
}

PbwElement PbwElement::operator-(const PbwElement& other) const {
  return *this + other * Rational(-1);
}

PbwElement PbwElement::operator*(const Rational& scalar) const {
  PbwElement result(dim_);
  if (scalar == 0) {
    return result;
  }
  result.terms_ = terms_;
  for (auto& [k, coeff] : result.terms_) {
    coeff *= scalar;
  }
  return result;
}

PbwElement& PbwElement::operator+=(const PbwElement& other) {
  if (dim_ != other.dim_) {
    throw std::invalid_argument("enveloping algebra dimension mismatch");
  }
  for (const auto& [k, coeff] : other.terms_) {
    add_term(k, coeff);
  }
  return *this;
}

bool PbwElement::operator==(const PbwElement& other) const {
  return dim_ == other.dim_ && terms_ == other.terms_;
}

std::string to_string(const PbwElement& u) {
  if (u.is_zero()) {
    return "0";
  }
  std::string out;
  for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it) {
    detail::render_term(out, it->second, it->first, 0, nullptr, 'e');
  }
  return out;
}

GuttStar::GuttStar(LieAlgebra algebra)
    : algebra_(std::move(algebra)), poisson_(PoissonStructure::from_lie(algebra_)) {}

// Normal form of e_i * e^L.  If i is no larger than every index in L the
// product is already ordered; otherwise split off the smallest letter j of
// L and rewrite e_i e_j = e_j e_i + [e_i, e_j]:
//   e_i e^L = e_j (e_i e^{L'}) + sum_k c_ij^k (e_k e^{L'}),  L' = L - e_j.
// Both summands are strictly smaller (by degree, or by the already-ordered
// fast path), so the recursion terminates.
PbwElement GuttStar::left_multiply_monomial(int i, const MultiIndex& l) const {
  const auto key = std::make_pair(i, l);
  auto it = leftmul_memo_.find(key);
  if (it != leftmul_memo_.end()) {
    return it->second;
  }

  const int n = dim();
  PbwElement result(n);
  int j = -1;
  for (int idx = 0; idx < n; ++idx) {
    if (l[idx] > 0) {
      j = idx;
      break;
    }
  }
  if (j < 0 || i <= j) {
    result.add_term(l.plus(MultiIndex::unit(n, i)), Rational(1));
  } else {
    const MultiIndex rest = *l.minus(MultiIndex::unit(n, j));
    const PbwElement inner = left_multiply_monomial(i, rest);
    result = left_multiply_locked(j, inner);
    for (int k = 0; k < n; ++k) {
      const Rational& c = algebra_.c(i, j, k);
      if (c != 0) {
        result += left_multiply_monomial(k, rest) * c;
      }
    }
  }
  leftmul_memo_.emplace(key, result);
  return result;
}

PbwElement GuttStar::left_multiply_locked(int i, const PbwElement& u) const {
  PbwElement result(dim());
  for (const auto& [m, coeff] : u.terms()) {
    result += left_multiply_monomial(i, m) * coeff;
  }
  return result;
}

PbwElement GuttStar::multiply_locked(const PbwElement& u, const PbwElement& v) const {
  PbwElement result(dim());
  for (const auto& [m, coeff] : u.terms()) {
    // e^M * v: feed the ordered word of M onto v from its last letter.
    PbwElement partial = v * coeff;
    for (int i = dim() - 1; i >= 0; --i) {
      for (int rep = 0; rep < m[i]; ++rep) {
        partial = left_multiply_locked(i, partial);
      }
    }
    result += partial;
  }
  return result;
}

// symmetrize(x^K) averages over which factor comes first:
// (1/|K|) sum_i K_i e_i * symmetrize(x^{K - e_i}).
PbwElement GuttStar::symmetrize_locked(const MultiIndex& k) const {
  auto it = symmetrize_memo_.find(k);
  if (it != symmetrize_memo_.end()) {
    return it->second;
  }
  const int n = dim();
  PbwElement result(n);
  if (k.degree() == 0) {
    result = PbwElement::one(n);
  } else {
    for (int i = 0; i < n; ++i) {
      if (k[i] == 0) {
        continue;
      }
      const PbwElement sub = symmetrize_locked(*k.minus(MultiIndex::unit(n, i)));
      result += left_multiply_locked(i, sub) * Rational(k[i], k.degree());
    }
  }
  symmetrize_memo_.emplace(k, result);
  return result;
}

std::map<int, Polynomial> GuttStar::decompose_locked(const PbwElement& u) const {
  std::map<int, Polynomial> slices;
  PbwElement rest = u;
  while (!rest.is_zero()) {
    const int d = rest.degree();
    Polynomial symbol(dim());
    for (const auto& [m, coeff] : rest.terms()) {
      if (m.degree() == d) {
        symbol.add_term(m, coeff);
      }
    }
    slices.emplace(d, symbol);
    for (const auto& [m, coeff] : symbol.terms()) {
      rest += symmetrize_locked(m) * (-coeff);
    }
  }
  return slices;
}

const std::map<int, Polynomial>& GuttStar::pair_decomposition(const MultiIndex& k,
                                                              const MultiIndex& l) const {
  std::lock_guard<std::mutex> lock(mu_);
  const auto key = std::make_pair(k, l);
  auto it = pair_memo_.find(key);
  if (it == pair_memo_.end()) {
    const PbwElement product = multiply_locked(symmetrize_locked(k), symmetrize_locked(l));
    it = pair_memo_.emplace(key, decompose_locked(product)).first;
  }
  return it->second;
}

PbwElement GuttStar::left_multiply(int i, const PbwElement& u) const {
  if (i < 0 || i >= dim() || u.dim() != dim()) {
    throw std::invalid_argument("generator index or dimension mismatch");
  }
  std::lock_guard<std::mutex> lock(mu_);
  return left_multiply_locked(i, u);
}

PbwElement GuttStar::multiply(const PbwElement& u, const PbwElement& v) const {
  if (u.dim() != dim() || v.dim() != dim()) {
    throw std::invalid_argument("enveloping algebra dimension mismatch");
  }
  std::lock_guard<std::mutex> lock(mu_);
  return multiply_locked(u, v);
}

PbwElement GuttStar::symmetrize(const MultiIndex& k) const {
  if (k.dim() != dim()) {
    throw std::invalid_argument("multi-index dimension mismatch");
  }
  std::lock_guard<std::mutex> lock(mu_);
  return symmetrize_locked(k);
}

PbwElement GuttStar::symmetrize(const Polynomial& f) const {
  if (f.dim() != dim()) {
    throw std::invalid_argument("polynomial dimension mismatch");
  }
  std::lock_guard<std::mutex> lock(mu_);
  PbwElement result(dim());
  for (const auto& [k, coeff] : f.terms()) {
    result += symmetrize_locked(k) * coeff;
  }
  return result;
}

std::map<int, Polynomial> GuttStar::decompose(const PbwElement& u) const {
  if (u.dim() != dim()) {
    throw std::invalid_argument("enveloping algebra dimension mismatch");
  }
  std::lock_guard<std::mutex> lock(mu_);
  return decompose_locked(u);
}

Polynomial GuttStar::cochain(int r, const Polynomial& f, const Polynomial& g) const {
  if (r < 0) {
    throw std::invalid_argument("cochain order must be non-negative");
  }
  if (f.dim() != dim() || g.dim() != dim()) {
    throw std::invalid_argument("polynomial dimension does not match the star-product");
  }
  if (r == 0) {
    return f * g;
  }
  const Rational scale = rational_pow(Rational(2), r);
  Polynomial result(dim());
  for (const auto& [k, cf] : f.terms()) {
    for (const auto& [l, cg] : g.terms()) {
      const int target = k.degree() + l.degree() - r;
      if (target < 0) {
        continue;
      }
      const std::map<int, Polynomial>& slices = pair_decomposition(k, l);
      const auto slice = slices.find(target);
      if (slice != slices.end()) {
        result += slice->second * (cf * cg * scale);
      }
    }
  }
  return result;
}

}  // namespace sunstar
