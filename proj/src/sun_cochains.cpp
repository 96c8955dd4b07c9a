#include "sunstar/sun_cochains.hpp"

#include "sunstar/fit.hpp"
#include "sunstar/hochschild.hpp"
#include "sunstar/poisson.hpp"

#include <utility>

namespace sunstar {

SunCochains::SunCochains(int dim, int order, int table_degree,
                         std::map<MultiIndex, NuSeries, GradedLexLess> table)
    : dim_(dim), order_(order), table_degree_(table_degree), table_(std::move(table)) {}

Polynomial SunCochains::value(int r, const MultiIndex& k) const {
  if (r < 0 || r > order_) {
    throw std::out_of_range("cochain order outside the extracted range");
  }
  if (k.dim() != dim_ || k.degree() > table_degree_) {
    throw std::out_of_range("monomial outside the extracted table");
  }
  if (r == 0) {
    return Polynomial::monomial(k, Rational(1));
  }
  return table_.at(k).coeff(r);
}

const DiffOp& SunCochains::rho(int r) const {
  if (r < 1 || r > reconstructed_count()) {
    throw std::out_of_range("cochain operator not reconstructed");
  }
  return rho_[r - 1];
}

void SunCochains::push_rho(const DiffOp& op) {
  if (op.dim() != dim_) {
    throw std::invalid_argument("cochain operator dimension mismatch");
  }
  if (reconstructed_count() >= order_) {
    throw std::logic_error("all cochain operators are already reconstructed");
  }
  rho_.push_back(op);
}

SunCochains extract_sun_cochains(const SunProduct& sun, int order, int table_degree) {
  if (order < 1 || order > sun.order()) {
    throw std::invalid_argument("extraction order outside the sun product truncation");
  }
  if (table_degree < 0) {
    throw std::invalid_argument("table degree must be nonnegative");
  }
  std::map<MultiIndex, NuSeries, GradedLexLess> table;
  for_each_multi_index(sun.dim(), table_degree, [&](const MultiIndex& k) {
    table.emplace(k, sun.symmetrized(FactorMultiset{k}));
  });
  return SunCochains(sun.dim(), order, table_degree, std::move(table));
}

DiffOp reconstruct_cochain_diffop(const StarProduct& star, const SunCochains& cochains,
                                  int r, int fit_degree) {
  const int dim = cochains.dim();
  if (star.dim() != dim) {
    throw std::invalid_argument("star product dimension mismatch");
  }
  if (r < 1 || r > cochains.order()) {
    throw std::invalid_argument("cochain order outside the extracted range");
  }
  if (cochains.reconstructed_count() < r - 1) {
    throw std::logic_error("lower cochain operators must be reconstructed first");
  }
  if (fit_degree > cochains.table_degree()) {
    throw std::invalid_argument("fit degree exceeds the extracted table");
  }

  const auto phi = [&](const Polynomial& f, const Polynomial& g) {
    Polynomial value = -star.cochain(r, f, g);
    for (int a = 1; a < r; ++a) {
      value -= star.cochain(a, f, cochains.rho(r - a).apply(g));
    }
    return value;
  };

  // phi_r is null on constants in both slots, so probing with x_i isolates
  // the components phi^{i,J}: the fit returns sum_J phi^{i,J} d_J.
  DiffOp psi(dim);
  for (int i = 0; i < dim; ++i) {
    const Polynomial xi = Polynomial::variable(dim, i);
    const DiffOp slot = fit_diffop([&](const Polynomial& g) { return phi(xi, g); }, dim,
                                   fit_degree, fit_degree);
    for (const auto& [j, coeff] : slot.terms()) {
      const int weight = j.degree();
      if (weight < 1) {
        continue;
      }
      psi += DiffOp::term(coeff * Rational(-1, weight + 1),
                          j.plus(MultiIndex::unit(dim, i)));
    }
  }

  bool ok = true;
  MultiIndex witness(dim);
  for_each_multi_index(dim, fit_degree, [&](const MultiIndex& k) {
    if (!ok) {
      return;
    }
    if (psi.apply(Polynomial::monomial(k, Rational(1))) != cochains.value(r, k)) {
      ok = false;
      witness = k;
    }
  });
  if (!ok) {
    throw ReconstructionError("reconstructed cochain operator disagrees with the table",
                              witness);
  }
  return psi;
}

void reconstruct_all(const StarProduct& star, SunCochains& cochains, int fit_degree) {
  for (int r = cochains.reconstructed_count() + 1; r <= cochains.order(); ++r) {
    cochains.push_rho(reconstruct_cochain_diffop(star, cochains, r, fit_degree));
  }
}

Polynomial first_cochain_coboundary_residual(const StarProduct& star, const DiffOp& rho1,
                                             const Polynomial& f, const Polynomial& g) {
  const Polynomial coboundary = hochschild_coboundary(rho1)(f, g);
  return coboundary - star.poisson().bracket(f, g) + star.cochain(1, f, g);
}

}  // namespace sunstar
