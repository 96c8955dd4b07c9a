#include "sunstar/lie_algebra.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace sunstar {

LinearForm::LinearForm(int dim) {
  if (dim <= 0) {
    throw std::invalid_argument("linear form dimension must be positive");
  }
  coeffs_.assign(static_cast<std::size_t>(dim), Rational(0));
}

LinearForm::LinearForm(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("linear form dimension must be positive");
  }
}

LinearForm LinearForm::basis(int dim, int i) {
  LinearForm result(dim);
  result.set_coeff(i, Rational(1));
  return result;
}

const Rational& LinearForm::coeff(int i) const {
  if (i < 0 || i >= dim()) {
    throw std::out_of_range("linear form coefficient index out of range");
  }
  return coeffs_[static_cast<std::size_t>(i)];
}

void LinearForm::set_coeff(int i, const Rational& value) {
  if (i < 0 || i >= dim()) {
    throw std::out_of_range("linear form coefficient index out of range");
  }
  coeffs_[static_cast<std::size_t>(i)] = value;
}

bool LinearForm::is_zero() const {
  for (const Rational& a : coeffs_) {
    if (a != 0) {
      return false;
    }
  }
  return true;
}

Polynomial LinearForm::to_polynomial() const {
  Polynomial result(dim());
  for (int i = 0; i < dim(); ++i) {
    result.add_term(MultiIndex::unit(dim(), i), coeffs_[static_cast<std::size_t>(i)]);
  }
  return result;
}

LinearForm LinearForm::from_polynomial(const Polynomial& f) {
  LinearForm result(f.dim());
  for (const auto& [k, coeff] : f.terms()) {
    if (k.degree() != 1) {
      throw std::invalid_argument("polynomial is not homogeneous of degree one");
    }
    for (int i = 0; i < f.dim(); ++i) {
      if (k[i] == 1) {
        result.set_coeff(i, coeff);
      }
    }
  }
  return result;
}

LinearForm LinearForm::operator-() const {
  LinearForm result = *this;
  for (Rational& a : result.coeffs_) {
    a = -a;
  }
  return result;
}

LinearForm LinearForm::operator+(const LinearForm& other) const {
  LinearForm result = *this;
  result += other;
  return result;
}

LinearForm LinearForm::operator-(const LinearForm& other) const {
  return *this + (-other);
}

LinearForm LinearForm::operator*(const Rational& scalar) const {
  LinearForm result = *this;
  for (Rational& a : result.coeffs_) {
    a *= scalar;
  }
  return result;
}

LinearForm& LinearForm::operator+=(const LinearForm& other) {
  if (dim() != other.dim()) {
    throw std::invalid_argument("linear form dimension mismatch");
  }
  for (int i = 0; i < dim(); ++i) {
    coeffs_[static_cast<std::size_t>(i)] += other.coeffs_[static_cast<std::size_t>(i)];
  }
  return *this;
}

std::string to_string(const LinearForm& form) {
  return to_string(form.to_polynomial());
}

LieAlgebra::LieAlgebra(int dim, const std::vector<StructureEntry>& entries) : dim_(dim) {
  if (dim <= 0) {
    throw std::invalid_argument("Lie algebra dimension must be positive");
  }
  constants_.assign(static_cast<std::size_t>(dim) * dim * dim, Rational(0));
  for (const StructureEntry& e : entries) {
    if (e.i < 0 || e.j < 0 || e.k < 0 || e.i >= dim || e.j >= dim || e.k >= dim) {
      throw std::invalid_argument("structure constant index out of range");
    }
    if (e.i >= e.j) {
      throw std::invalid_argument("structure constants must be given with i < j");
    }
    if (c(e.i, e.j, e.k) != 0) {
      throw std::invalid_argument("duplicate structure constant entry");
    }
    c_mutable(e.i, e.j, e.k) = e.value;
    c_mutable(e.j, e.i, e.k) = -e.value;
  }

  // Jacobi: [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0.
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      for (int k = j + 1; k < dim; ++k) {
        for (int l = 0; l < dim; ++l) {
          Rational sum(0);
          for (int m = 0; m < dim; ++m) {
            sum += c(i, j, m) * c(m, k, l);
            sum += c(j, k, m) * c(m, i, l);
            sum += c(k, i, m) * c(m, j, l);
          }
          if (sum != 0) {
            std::ostringstream msg;
            msg << "structure constants violate the Jacobi identity at triple (" << i + 1
                << ", " << j + 1 << ", " << k + 1 << ")";
            throw std::invalid_argument(msg.str());
          }
        }
      }
    }
  }
}

LieAlgebra LieAlgebra::abelian(int dim) {
  return LieAlgebra(dim, {});
}

LieAlgebra LieAlgebra::heisenberg() {
  return LieAlgebra(3, {{0, 1, 2, Rational(1)}});
}

LieAlgebra LieAlgebra::su2() {
  return LieAlgebra(3, {{0, 1, 2, Rational(1)},
                        {1, 2, 0, Rational(1)},
                        {0, 2, 1, Rational(-1)}});
}

const Rational& LieAlgebra::c(int i, int j, int k) const {
  return constants_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
}

Rational& LieAlgebra::c_mutable(int i, int j, int k) {
  return constants_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
}

LinearForm LieAlgebra::bracket(const LinearForm& x, const LinearForm& y) const {
  if (x.dim() != dim_ || y.dim() != dim_) {
    throw std::invalid_argument("linear form dimension does not match the algebra");
  }
  LinearForm result(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x.coeff(i) == 0) {
      continue;
    }
    for (int j = 0; j < dim_; ++j) {
      if (y.coeff(j) == 0) {
        continue;
      }
      const Rational weight = x.coeff(i) * y.coeff(j);
      for (int k = 0; k < dim_; ++k) {
        if (c(i, j, k) != 0) {
          result.set_coeff(k, result.coeff(k) + weight * c(i, j, k));
        }
      }
    }
  }
  return result;
}

LinearForm LieAlgebra::ad_power(const LinearForm& y, int r, const LinearForm& x) const {
  if (r < 0) {
    throw std::invalid_argument("ad power must be non-negative");
  }
  LinearForm result = x;
  for (int step = 0; step < r; ++step) {
    result = bracket(y, result);
  }
  return result;
}

}  // namespace sunstar
