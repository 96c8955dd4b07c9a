#include "sunstar/diff_op.hpp"

#include "term_render.hpp"

#include <stdexcept>

namespace sunstar {

DiffOp::DiffOp(int dim) : dim_(dim) {
  if (dim < 1) {
    throw std::invalid_argument("operator dimension must be >= 1");
  }
}

DiffOp DiffOp::identity(int dim) {
  DiffOp result(dim);
  result.add_term(MultiIndex(dim), Polynomial::constant(dim, 1));
  return result;
}

DiffOp DiffOp::term(const Polynomial& coeff, const MultiIndex& j) {
  DiffOp result(coeff.dim());
  result.add_term(j, coeff);
  return result;
}

DiffOp DiffOp::partial(int dim, const MultiIndex& j) {
  DiffOp result(dim);
  result.add_term(j, Polynomial::constant(dim, 1));
  return result;
}

int DiffOp::order() const {
  int result = -1;
  for (const auto& [j, coeff] : terms_) {
    result = std::max(result, j.degree());
  }
  return result;
}

bool DiffOp::annihilates_constants() const {
  return terms_.find(MultiIndex(dim_)) == terms_.end();
}

bool DiffOp::annihilates_linear() const {
  if (!annihilates_constants()) {
    return false;
  }
  for (const auto& [j, coeff] : terms_) {
    if (j.degree() == 1) {
      return false;
    }
  }
  return true;
}

void DiffOp::add_term(const MultiIndex& j, const Polynomial& coeff) {
  if (j.dim() != dim_ || coeff.dim() != dim_) {
    throw std::invalid_argument("operator term dimension mismatch");
  }
  if (coeff.is_zero()) {
    return;
  }
  const auto [it, inserted] = terms_.try_emplace(j, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

Polynomial DiffOp::apply(const Polynomial& f) const {
  if (f.dim() != dim_) {
    throw std::invalid_argument("operator/polynomial dimension mismatch");
  }
  Polynomial result(dim_);
  for (const auto& [j, coeff] : terms_) {
    result += coeff * f.derivative(j);
  }
  return result;
}

NuSeries DiffOp::apply(const NuSeries& f) const {
  NuSeries result(f.dim(), f.order());
  for (int r = 0; r <= f.order(); ++r) {
    result.set_coeff(r, apply(f.coeff(r)));
  }
  return result;
}

DiffOp DiffOp::operator-() const {
  DiffOp result(dim_);
  for (const auto& [j, coeff] : terms_) {
    result.terms_.emplace(j, -coeff);
  }
  return result;
}

DiffOp DiffOp::operator+(const DiffOp& other) const {
  DiffOp result = *this;
  result += other;
  return result;
}

DiffOp DiffOp::operator-(const DiffOp& other) const {
  DiffOp result = *this;
  result += -other;
  return result;
}

DiffOp& DiffOp::operator+=(const DiffOp& other) {
  if (dim_ != other.dim_) {
    throw std::invalid_argument("operator dimension mismatch");
  }
  for (const auto& [j, coeff] : other.terms_) {
    add_term(j, coeff);
  }
  return *this;
}

DiffOp DiffOp::operator*(const Rational& scalar) const {
  DiffOp result(dim_);
  if (scalar == 0) {
    return result;
  }
  for (const auto& [j, coeff] : terms_) {
    result.terms_.emplace(j, coeff * scalar);
  }
  return result;
}

bool DiffOp::operator==(const DiffOp& other) const {
  return dim_ == other.dim_ && terms_ == other.terms_;
}

DiffOp compose(const DiffOp& a, const DiffOp& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("operator dimension mismatch");
  }
  const int dim = a.dim();
  DiffOp result(dim);
  // a_I d_I (b_J d_J f) = a_I sum_{S<=I} binom(I,S) d_S(b_J) d_{I-S+J} f
  for (const auto& [i, ai] : a.terms()) {
    for (const auto& [j, bj] : b.terms()) {
      for_each_multi_index(dim, i.degree(), [&](const MultiIndex& s) {
        if (!i.contains(s)) {
          return;
        }
        const Polynomial ds_b = bj.derivative(s);
        if (ds_b.is_zero()) {
          return;
        }
        const MultiIndex target = i.minus(s)->plus(j);
        result.add_term(target, ai * ds_b * Rational(i.binomial_product(s)));
      });
    }
  }
  return result;
}

std::string to_string(const DiffOp& op) {
  if (op.is_zero()) {
    return "0";
  }
  std::string out;
  for (auto it = op.terms().rbegin(); it != op.terms().rend(); ++it) {
    const auto& [j, coeff] = *it;
    // Render the coefficient polynomial term by term so each printed summand
    // is a plain monomial times derivatives.
    for (auto ct = coeff.terms().rbegin(); ct != coeff.terms().rend(); ++ct) {
      detail::render_term(out, ct->second, ct->first, 0, &j);
    }
  }
  return out;
}

BiDiffOp::BiDiffOp(int dim) : dim_(dim) {
  if (dim < 1) {
    throw std::invalid_argument("operator dimension must be >= 1");
  }
}

void BiDiffOp::add_term(const MultiIndex& i, const MultiIndex& j,
                        const Polynomial& coeff) {
  if (i.dim() != dim_ || j.dim() != dim_ || coeff.dim() != dim_) {
    throw std::invalid_argument("operator term dimension mismatch");
  }
  if (coeff.is_zero()) {
    return;
  }
  const auto key = std::make_pair(i, j);
  const auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

Polynomial BiDiffOp::apply(const Polynomial& f, const Polynomial& g) const {
  if (f.dim() != dim_ || g.dim() != dim_) {
    throw std::invalid_argument("operator/polynomial dimension mismatch");
  }
  Polynomial result(dim_);
  for (const auto& [key, coeff] : terms_) {
    const Polynomial df = f.derivative(key.first);
    if (df.is_zero()) {
      continue;
    }
    const Polynomial dg = g.derivative(key.second);
    if (dg.is_zero()) {
      continue;
    }
    result += coeff * df * dg;
  }
  return result;
}

BiDiffOp BiDiffOp::operator+(const BiDiffOp& other) const {
  if (dim_ != other.dim_) {
    throw std::invalid_argument("operator dimension mismatch");
  }
  BiDiffOp result = *this;
  for (const auto& [key, coeff] : other.terms_) {
    result.add_term(key.first, key.second, coeff);
  }
  return result;
}

BiDiffOp BiDiffOp::operator*(const Rational& scalar) const {
  BiDiffOp result(dim_);
  if (scalar == 0) {
    return result;
  }
  for (const auto& [key, coeff] : terms_) {
    result.terms_.emplace(key, coeff * scalar);
  }
  return result;
}

bool BiDiffOp::operator==(const BiDiffOp& other) const {
  return dim_ == other.dim_ && terms_ == other.terms_;
}

}  // namespace sunstar
