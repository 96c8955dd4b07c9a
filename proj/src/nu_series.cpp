#include "sunstar/nu_series.hpp"

#include "term_render.hpp"

#include <stdexcept>

namespace sunstar {

NuSeries::NuSeries(int dim, int order) : dim_(dim), order_(order) {
  if (dim < 1) {
    throw std::invalid_argument("series dimension must be >= 1");
  }
  if (order < 0) {
    throw std::invalid_argument("series truncation order must be >= 0");
  }
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Polynomial(dim));
}

NuSeries NuSeries::from_polynomial(const Polynomial& p, int order) {
  NuSeries result(p.dim(), order);
  result.coeffs_[0] = p;
  return result;
}

const Polynomial& NuSeries::coeff(int r) const {
  if (r < 0 || r > order_) {
    throw std::out_of_range("series coefficient index out of range");
  }
  return coeffs_[static_cast<std::size_t>(r)];
}

void NuSeries::set_coeff(int r, const Polynomial& p) {
  if (r < 0 || r > order_) {
    throw std::out_of_range("series coefficient index out of range");
  }
  if (p.dim() != dim_) {
    throw std::invalid_argument("series coefficient dimension mismatch");
  }
  coeffs_[static_cast<std::size_t>(r)] = p;
}

void NuSeries::add_coeff(int r, const Polynomial& p) {
  if (r < 0 || r > order_) {
    throw std::out_of_range("series coefficient index out of range");
  }
  if (p.dim() != dim_) {
    throw std::invalid_argument("series coefficient dimension mismatch");
  }
  coeffs_[static_cast<std::size_t>(r)] += p;
}

bool NuSeries::is_zero() const {
  for (const Polynomial& c : coeffs_) {
    if (!c.is_zero()) {
      return false;
    }
  }
  return true;
}

bool NuSeries::is_constant_in_nu() const {
  for (int r = 1; r <= order_; ++r) {
    if (!coeffs_[static_cast<std::size_t>(r)].is_zero()) {
      return false;
    }
  }
  return true;
}

void NuSeries::check_compatible(const NuSeries& other) const {
  if (dim_ != other.dim_) {
    throw std::invalid_argument("series dimension mismatch");
  }
  if (order_ != other.order_) {
    throw std::invalid_argument("series truncation order mismatch");
  }
}

NuSeries NuSeries::operator-() const {
  NuSeries result(dim_, order_);
  for (int r = 0; r <= order_; ++r) {
    result.coeffs_[r] = -coeffs_[r];
  }
  return result;
}

NuSeries NuSeries::operator+(const NuSeries& other) const {
  NuSeries result = *this;
  result += other;
  return result;
}

NuSeries NuSeries::operator-(const NuSeries& other) const {
  NuSeries result = *this;
  result -= other;
  return result;
}

NuSeries& NuSeries::operator+=(const NuSeries& other) {
  check_compatible(other);
  for (int r = 0; r <= order_; ++r) {
    coeffs_[r] += other.coeffs_[r];
  }
  return *this;
}

NuSeries& NuSeries::operator-=(const NuSeries& other) {
  check_compatible(other);
  for (int r = 0; r <= order_; ++r) {
    coeffs_[r] -= other.coeffs_[r];
  }
  return *this;
}

NuSeries NuSeries::operator*(const NuSeries& other) const {
  check_compatible(other);
  NuSeries result(dim_, order_);
  for (int a = 0; a <= order_; ++a) {
    if (coeffs_[a].is_zero()) {
      continue;
    }
    for (int b = 0; a + b <= order_; ++b) {
      if (other.coeffs_[b].is_zero()) {
        continue;
      }
      result.coeffs_[a + b] += coeffs_[a] * other.coeffs_[b];
    }
  }
  return result;
}

NuSeries NuSeries::operator*(const Rational& scalar) const {
  NuSeries result = *this;
  for (int r = 0; r <= order_; ++r) {
    result.coeffs_[r] *= scalar;
  }
  return result;
}

bool NuSeries::operator==(const NuSeries& other) const {
  return dim_ == other.dim_ && order_ == other.order_ && coeffs_ == other.coeffs_;
}

std::string to_string(const NuSeries& s) {
  if (s.is_zero()) {
    return "0";
  }
  std::string out;
  for (int r = 0; r <= s.order(); ++r) {
    const Polynomial& c = s.coeff(r);
    for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
      detail::render_term(out, it->second, it->first, r);
    }
  }
  return out;
}

}  // namespace sunstar
