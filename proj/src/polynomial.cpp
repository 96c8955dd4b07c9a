#include "sunstar/polynomial.hpp"

#include "term_render.hpp"

#include <stdexcept>

namespace sunstar {

Polynomial::Polynomial(int dim) : dim_(dim) {
  if (dim < 1) {
    throw std::invalid_argument("polynomial dimension must be >= 1");
  }
}

Polynomial Polynomial::constant(int dim, const Rational& c) {
  Polynomial result(dim);
  result.add_term(MultiIndex(dim), c);
  return result;
}

Polynomial Polynomial::variable(int dim, int i) {
  Polynomial result(dim);
  result.add_term(MultiIndex::unit(dim, i), 1);
  return result;
}

Polynomial Polynomial::monomial(const MultiIndex& k, const Rational& c) {
  Polynomial result(k.dim());
  result.add_term(k, c);
  return result;
}

int Polynomial::degree() const {
  if (terms_.empty()) {
    return -1;
  }
  // The graded-lex maximum is the last term.
  return terms_.rbegin()->first.degree();
}

Rational Polynomial::coefficient(const MultiIndex& k) const {
  const auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const MultiIndex& k, const Rational& c) {
  if (k.dim() != dim_) {
    throw std::invalid_argument("polynomial term dimension mismatch");
  }
  if (c == 0) {
    return;
  }
  const auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

void Polynomial::check_same_dim(const Polynomial& other) const {
  if (dim_ != other.dim_) {
    throw std::invalid_argument("polynomial dimension mismatch");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial result(dim_);
  for (const auto& [k, c] : terms_) {
    result.terms_.emplace(k, -c);
  }
  return result;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial result = *this;
  result += other;
  return result;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial result = *this;
  result -= other;
  return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_dim(other);
  for (const auto& [k, c] : other.terms_) {
    add_term(k, c);
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same_dim(other);
  for (const auto& [k, c] : other.terms_) {
    add_term(k, -c);
  }
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_same_dim(other);
  Polynomial result(dim_);
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : other.terms_) {
      result.add_term(ka.plus(kb), ca * cb);
    }
  }
  return result;
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
  Polynomial result = *this;
  result *= scalar;
  return result;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) {
    c *= scalar;
  }
  return *this;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return dim_ == other.dim_ && terms_ == other.terms_;
}

Polynomial Polynomial::derivative(int i) const {
  if (i < 0 || i >= dim_) {
    throw std::out_of_range("derivative index out of range");
  }
  Polynomial result(dim_);
  for (const auto& [k, c] : terms_) {
    if (k[i] == 0) {
      continue;
    }
    result.add_term(*k.minus(MultiIndex::unit(dim_, i)), c * k[i]);
  }
  return result;
}

Polynomial Polynomial::derivative(const MultiIndex& j) const {
  if (j.dim() != dim_) {
    throw std::invalid_argument("derivative multi-index dimension mismatch");
  }
  Polynomial result(dim_);
  for (const auto& [k, c] : terms_) {
    const auto reduced = k.minus(j);
    if (!reduced) {
      continue;
    }
    result.add_term(*reduced, c * Rational(k.falling_factorial(j)));
  }
  return result;
}

Polynomial Polynomial::pow(int exponent) const {
  if (exponent < 0) {
    throw std::invalid_argument("polynomial pow exponent must be >= 0");
  }
  Polynomial result = Polynomial::constant(dim_, 1);
  for (int i = 0; i < exponent; ++i) {
    result = result * *this;
  }
  return result;
}

Polynomial Polynomial::homogeneous_component(int degree) const {
  Polynomial result(dim_);
  for (const auto& [k, c] : terms_) {
    if (k.degree() == degree) {
      result.terms_.emplace(k, c);
    }
  }
  return result;
}

Polynomial operator*(const Rational& scalar, const Polynomial& p) {
  return p * scalar;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) {
    return "0";
  }
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    detail::render_term(out, it->second, it->first, 0);
  }
  return out;
}

}  // namespace sunstar
