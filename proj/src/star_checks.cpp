#include "sunstar/star_checks.hpp"

#include "sunstar/bernoulli.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace sunstar {

AssociativityReport check_associativity(const StarProduct& star, const Polynomial& f,
                                        const Polynomial& g, const Polynomial& h, int order) {
  const NuSeries fs = NuSeries::from_polynomial(f, order);
  const NuSeries gs = NuSeries::from_polynomial(g, order);
  const NuSeries hs = NuSeries::from_polynomial(h, order);
  const NuSeries left = star.mul(star.mul(fs, gs), hs);
  const NuSeries right = star.mul(fs, star.mul(gs, hs));
  for (int t = 0; t <= order; ++t) {
    const Polynomial residual = left.coeff(t) - right.coeff(t);
    if (!residual.is_zero()) {
      return AssociativityReport{false, t, residual};
    }
  }
  return AssociativityReport{true, -1, Polynomial(star.dim())};
}

CovarianceReport check_covariance(const StarProduct& star, const LieAlgebra& algebra,
                                  int order) {
  if (algebra.dim() != star.dim()) {
    throw std::invalid_argument("algebra dimension does not match the star-product");
  }
  const int n = star.dim();
  CovarianceReport report{true, {}};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Polynomial xi = Polynomial::variable(n, i);
      const Polynomial xj = Polynomial::variable(n, j);
      NuSeries residual = star.mul(xi, xj, order) - star.mul(xj, xi, order);
      const LinearForm bracket =
          algebra.bracket(LinearForm::basis(n, i), LinearForm::basis(n, j));
      if (order >= 1) {
        residual.add_coeff(1, bracket.to_polynomial() * Rational(-2));
      }
      bool zero = true;
      for (int t = 0; t <= order; ++t) {
        if (!residual.coeff(t).is_zero()) {
          zero = false;
          break;
        }
      }
      if (!zero) {
        report.pass = false;
        report.witnesses.push_back(CovarianceWitness{i, j, residual});
      }
    }
  }
  return report;
}

namespace {

// Polynomial coefficients of a bigraded expression, keyed by the exponent
// pair (a, b) of the formal parameters s and t.
using Binned = std::map<std::pair<int, int>, Polynomial>;

void binned_add(Binned& target, const std::pair<int, int>& key, const Polynomial& value) {
  if (value.is_zero()) {
    return;
  }
  auto [it, inserted] = target.emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) {
      target.erase(it);
    }
  }
}

Binned binned_mul(const Binned& lhs, const Binned& rhs, int cap) {
  Binned result;
  for (const auto& [ka, pa] : lhs) {
    for (const auto& [kb, pb] : rhs) {
      const int a = ka.first + kb.first;
      const int b = ka.second + kb.second;
      if (a + b > cap) {
        continue;
      }
      binned_add(result, {a, b}, pa * pb);
    }
  }
  return result;
}

Binned binned_scale(const Binned& lhs, const Rational& scalar) {
  Binned result;
  for (const auto& [key, value] : lhs) {
    result.emplace(key, value * scalar);
  }
  return result;
}

}  // namespace

ChsReport check_chs(const StarProduct& star, BchContext& bch, const LinearForm& x,
                    const LinearForm& y, int max_r, int max_degree) {
  const int n = star.dim();
  if (x.dim() != n || y.dim() != n || bch.algebra().dim() != n) {
    throw std::invalid_argument("dimension mismatch in exponential cochain check");
  }
  const Polynomial xp = x.to_polynomial();
  const Polynomial yp = y.to_polynomial();

  // Bins of Z_m(sX, tY): the part with a factors of X sits at (a, m+1-a).
  const auto z_binned = [&](int m) {
    Binned bins;
    const std::vector<LinearForm> parts = bch.z_bins(m, x, y);
    for (int a = 0; a < static_cast<int>(parts.size()); ++a) {
      binned_add(bins, {a, m + 1 - a}, parts[static_cast<std::size_t>(a)].to_polynomial());
    }
    return bins;
  };

  // F_r(sX, tY) through the defining recursion, in binned arithmetic.
  std::vector<Binned> f_binned;
  f_binned.push_back(Binned{{{0, 0}, Polynomial::constant(n, Rational(1))}});
  for (int s = 1; s <= max_r; ++s) {
    Binned sum;
    for (int k = 0; k < s; ++k) {
      const Binned product = binned_mul(z_binned(s - k), f_binned[static_cast<std::size_t>(k)],
                                        max_degree);
      for (const auto& [key, value] : product) {
        binned_add(sum, key, value * Rational(s - k));
      }
    }
    f_binned.push_back(binned_scale(sum, Rational(1, s)));
  }

  // exp(sX + tY): coefficient of s^a t^b is X^a Y^b / (a! b!).
  Binned exp_binned;
  for (int a = 0; a <= max_degree; ++a) {
    for (int b = 0; a + b <= max_degree; ++b) {
      binned_add(exp_binned, {a, b},
                 xp.pow(a) * yp.pow(b) * Rational(Integer(1), factorial(a) * factorial(b)));
    }
  }

  for (int r = 0; r <= max_r; ++r) {
    const Binned rhs = binned_mul(f_binned[static_cast<std::size_t>(r)], exp_binned, max_degree);
    for (int a = 0; a <= max_degree; ++a) {
      for (int b = 0; a + b <= max_degree; ++b) {
        const Polynomial lhs =
            star.cochain(r, xp.pow(a), yp.pow(b)) *
            Rational(Integer(1), factorial(a) * factorial(b));
        const auto it = rhs.find({a, b});
        const Polynomial residual =
            it == rhs.end() ? lhs : lhs - it->second;
        if (!residual.is_zero()) {
          return ChsReport{false, r, a, b, residual};
        }
      }
    }
  }
  return ChsReport{true, -1, -1, -1, Polynomial(n)};
}

EcoReport check_eco(const StarProduct& star, const LieAlgebra& algebra, const LinearForm& x,
                    const LinearForm& y, int max_r, int max_m) {
  const int n = star.dim();
  if (x.dim() != n || y.dim() != n || algebra.dim() != n) {
    throw std::invalid_argument("dimension mismatch in cochain closed-form check");
  }
  const Polynomial xp = x.to_polynomial();
  const Polynomial yp = y.to_polynomial();
  for (int m = 0; m <= max_m; ++m) {
    const Polynomial ym = yp.pow(m);
    for (int r = 0; r <= max_r && r <= m; ++r) {
      const Rational scale = rational_pow(Rational(2), r) * bernoulli(r) *
                             Rational(factorial(m), factorial(r) * factorial(m - r));
      const Polynomial expected =
          algebra.ad_power(y, r, x).to_polynomial() * yp.pow(m - r) * scale;
      const Polynomial residual = star.cochain(r, xp, ym) - expected;
      if (!residual.is_zero()) {
        return EcoReport{false, r, m, residual};
      }
    }
  }
  return EcoReport{true, -1, -1, Polynomial(n)};
}

}  // namespace sunstar
