#include "sunstar/poisson.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace sunstar {

namespace {

void check_matrix_shape(const std::vector<std::vector<Polynomial>>& matrix) {
  const std::size_t n = matrix.size();
  if (n == 0) {
    throw std::invalid_argument("Poisson matrix must be non-empty");
  }
  for (const auto& row : matrix) {
    if (row.size() != n) {
      throw std::invalid_argument("Poisson matrix must be square");
    }
    for (const Polynomial& p : row) {
      if (p.dim() != static_cast<int>(n)) {
        throw std::invalid_argument("Poisson matrix entry dimension mismatch");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (matrix[i][j] != -matrix[j][i]) {
        throw std::invalid_argument("Poisson matrix must be antisymmetric");
      }
    }
  }
}

}  // namespace

JacobiReport jacobi_check(const std::vector<std::vector<Polynomial>>& matrix) {
  check_matrix_shape(matrix);
  const int n = static_cast<int>(matrix.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        Polynomial sum(n);
        for (int l = 0; l < n; ++l) {
          sum = sum + matrix[i][l] * matrix[j][k].derivative(l);
          sum = sum + matrix[j][l] * matrix[k][i].derivative(l);
          sum = sum + matrix[k][l] * matrix[i][j].derivative(l);
        }
        if (!sum.is_zero()) {
          return JacobiReport{false, i, j, k, sum};
        }
      }
    }
  }
  return JacobiReport{true, -1, -1, -1, Polynomial(n)};
}

PoissonStructure::PoissonStructure(std::vector<std::vector<Polynomial>> matrix)
    : dim_(static_cast<int>(matrix.size())), matrix_(std::move(matrix)) {
  const JacobiReport report = jacobi_check(matrix_);
  if (!report.pass) {
    std::ostringstream msg;
    msg << "Poisson matrix violates the Jacobi identity at triple (" << report.i + 1 << ", "
        << report.j + 1 << ", " << report.k + 1 << ")";
    throw std::invalid_argument(msg.str());
  }
}

PoissonStructure PoissonStructure::constant(const std::vector<std::vector<Rational>>& matrix) {
  const int n = static_cast<int>(matrix.size());
  std::vector<std::vector<Polynomial>> entries;
  entries.reserve(matrix.size());
  for (const auto& row : matrix) {
    std::vector<Polynomial> poly_row;
    poly_row.reserve(row.size());
    for (const Rational& value : row) {
      poly_row.push_back(Polynomial::constant(n, value));
    }
    entries.push_back(std::move(poly_row));
  }
  return PoissonStructure(std::move(entries));
}

PoissonStructure PoissonStructure::standard_symplectic(int dim) {
  if (dim <= 0 || dim % 2 != 0) {
    throw std::invalid_argument("symplectic dimension must be even and positive");
  }
  std::vector<std::vector<Rational>> matrix(
      static_cast<std::size_t>(dim), std::vector<Rational>(static_cast<std::size_t>(dim), Rational(0)));
  for (int a = 0; a + 1 < dim; a += 2) {
    matrix[a][a + 1] = Rational(1);
    matrix[a + 1][a] = Rational(-1);
  }
  return constant(matrix);
}

PoissonStructure PoissonStructure::from_lie(const LieAlgebra& algebra) {
  const int n = algebra.dim();
  std::vector<std::vector<Polynomial>> entries(static_cast<std::size_t>(n),
                                               std::vector<Polynomial>());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Polynomial p(n);
      for (int k = 0; k < n; ++k) {
        p.add_term(MultiIndex::unit(n, k), algebra.c(i, j, k));
      }
      entries[static_cast<std::size_t>(i)].push_back(std::move(p));
    }
  }
  return PoissonStructure(std::move(entries));
}

const Polynomial& PoissonStructure::entry(int i, int j) const {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_) {
    throw std::out_of_range("Poisson matrix index out of range");
  }
  return matrix_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

bool PoissonStructure::is_constant() const {
  for (const auto& row : matrix_) {
    for (const Polynomial& p : row) {
      if (p.degree() > 0) {
        return false;
      }
    }
  }
  return true;
}

Rational PoissonStructure::constant_entry(int i, int j) const {
  const Polynomial& p = entry(i, j);
  if (p.degree() > 0) {
    throw std::logic_error("Poisson matrix entry is not constant");
  }
  if (p.is_zero()) {
    return Rational(0);
  }
  return p.terms().begin()->second;
}

Polynomial PoissonStructure::bracket(const Polynomial& f, const Polynomial& g) const {
  if (f.dim() != dim_ || g.dim() != dim_) {
    throw std::invalid_argument("polynomial dimension does not match the Poisson structure");
  }
  Polynomial result(dim_);
  for (int i = 0; i < dim_; ++i) {
    const Polynomial df = f.derivative(i);
    if (df.is_zero()) {
      continue;
    }
    for (int j = 0; j < dim_; ++j) {
      const Polynomial& p = entry(i, j);
      if (p.is_zero()) {
        continue;
      }
      result = result + p * df * g.derivative(j);
    }
  }
  return result;
}

}  // namespace sunstar
