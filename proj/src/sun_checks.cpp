#include "sunstar/sun_checks.hpp"

#include "sunstar/twist.hpp"

#include <stdexcept>
#include <utility>

namespace sunstar {

namespace {

// Calls fn(k, l) for every ordered monomial pair with |k| + |l| <= degree,
// stopping early once stop is set.
template <typename Fn>
void for_each_monomial_pair(int dim, int degree, const bool& stop, Fn&& fn) {
  for_each_multi_index(dim, degree, [&](const MultiIndex& k) {
    if (stop) {
      return;
    }
    for_each_multi_index(dim, degree - k.degree(), [&](const MultiIndex& l) {
      if (stop) {
        return;
      }
      fn(k, l);
    });
  });
}

}  // namespace

InEpReport check_in_EP(const StarProductPtr& star, int order, int degree) {
  const SunProduct sun(star, order);
  InEpReport report{true, 0, MultiIndex(star->dim()), Polynomial(star->dim())};
  for_each_multi_index(star->dim(), degree, [&](const MultiIndex& k) {
    if (!report.pass) {
      return;
    }
    const NuSeries& value = sun.symmetrized(FactorMultiset{k});
    for (int r = 1; r <= order; ++r) {
      if (!value.coeff(r).is_zero()) {
        report = InEpReport{false, r, k, value.coeff(r)};
        return;
      }
    }
  });
  return report;
}

EquivalenceToEp equivalence_to_EP(const StarProductPtr& star, int order, int degree) {
  const SunProduct sun(star, order);
  SunCochains cochains = extract_sun_cochains(sun, order, degree);
  reconstruct_all(*star, cochains, degree);

  OperatorSeries twist = OperatorSeries::identity(star->dim(), order);
  for (int r = 1; r <= order; ++r) {
    if (!cochains.rho(r).is_zero()) {
      twist.set_term(r, cochains.rho(r));
    }
  }
  StarProductPtr result = apply_equivalence(twist, star);
  if (!check_in_EP(result, order, degree).pass) {
    throw std::logic_error("twist by the cochain series failed to clear the sun-cochains");
  }
  return EquivalenceToEp{std::move(twist), std::move(result)};
}

StarProductPtr build_star_with_cochains(const StarProductPtr& base,
                                        const std::vector<DiffOp>& etas, int order) {
  if (!base) {
    throw std::invalid_argument("base star product is null");
  }
  if (order < static_cast<int>(etas.size())) {
    throw std::invalid_argument("truncation order below the last prescribed cochain");
  }
  OperatorSeries t = OperatorSeries::identity(base->dim(), order);
  for (std::size_t i = 0; i < etas.size(); ++i) {
    if (etas[i].dim() != base->dim()) {
      throw std::invalid_argument("prescribed cochain dimension mismatch");
    }
    if (!etas[i].annihilates_constants() || !etas[i].annihilates_linear()) {
      throw std::invalid_argument(
          "prescribed cochains must vanish on constants and linear polynomials");
    }
    if (!etas[i].is_zero()) {
      t.set_term(static_cast<int>(i) + 1, etas[i]);
    }
  }
  // The desired star D satisfies T(f *base g) = T(f) D T(g): monomial
  // symmetrization then turns the base's plain values into T(x^K), making
  // the series of the eta's the sun-cochain series.  In terms of the twist
  // convention T'(f D g) = T'(f) *base T'(g), that is the twist by T^{-1}.
  return apply_equivalence(inverse(t, order), base);
}

OperatorSeries weak_trivializer(const SunProduct& sun, int order, int degree) {
  SunCochains cochains = extract_sun_cochains(sun, order, degree);
  reconstruct_all(*sun.star(), cochains, degree);

  OperatorSeries rho = OperatorSeries::identity(sun.dim(), order);
  for (int r = 1; r <= order; ++r) {
    if (!cochains.rho(r).is_zero()) {
      rho.set_term(r, cochains.rho(r));
    }
  }
  OperatorSeries trivializer = inverse(rho, order);

  bool stop = false;
  for_each_monomial_pair(sun.dim(), degree, stop, [&](const MultiIndex& k, const MultiIndex& l) {
    const NuSeries mapped = trivializer.apply(
        sun.mul(Polynomial::monomial(k, Rational(1)), Polynomial::monomial(l, Rational(1))));
    const Polynomial plain = Polynomial::monomial(k.plus(l), Rational(1));
    for (int r = 0; r <= order; ++r) {
      if (mapped.coeff(r) != (r == 0 ? plain : Polynomial(sun.dim()))) {
        stop = true;
        return;
      }
    }
  });
  if (stop) {
    throw std::logic_error("trivializing operator failed to flatten a product");
  }
  return trivializer;
}

WeakEquivalenceReport check_weak_equivalence(const SunProduct& a, const SunProduct& b,
                                             const OperatorSeries& s, int order, int degree) {
  const int dim = a.dim();
  if (b.dim() != dim || s.dim() != dim) {
    throw std::invalid_argument("weak equivalence dimension mismatch");
  }
  if (order > a.order() || order > b.order()) {
    throw std::invalid_argument("comparison order exceeds a truncation order");
  }
  WeakEquivalenceReport report{true, MultiIndex(dim), MultiIndex(dim), NuSeries(dim, order)};
  bool stop = false;
  for_each_monomial_pair(dim, degree, stop, [&](const MultiIndex& k, const MultiIndex& l) {
    const Polynomial f = Polynomial::monomial(k, Rational(1));
    const Polynomial g = Polynomial::monomial(l, Rational(1));
    const NuSeries lhs = s.apply(a.mul(f, g));
    const NuSeries rhs = b.mul(f, g);
    NuSeries residual(dim, order);
    for (int r = 0; r <= order; ++r) {
      residual.set_coeff(r, lhs.coeff(r) - rhs.coeff(r));
    }
    if (!residual.is_zero()) {
      report = WeakEquivalenceReport{false, k, l, std::move(residual)};
      stop = true;
    }
  });
  return report;
}

StrongEquivalenceReport check_strong_equivalence(const SunProduct& a, const SunProduct& b,
                                                 const OperatorSeries& s, int order,
                                                 int degree) {
  const int dim = a.dim();
  if (b.dim() != dim || s.dim() != dim) {
    throw std::invalid_argument("strong equivalence dimension mismatch");
  }
  SunCochains rho_a = extract_sun_cochains(a, order, degree);
  reconstruct_all(*a.star(), rho_a, degree);
  SunCochains rho_b = extract_sun_cochains(b, order, degree);
  reconstruct_all(*b.star(), rho_b, degree);

  const auto apply_rho = [dim](const SunCochains& rho, int r, const Polynomial& f) {
    return r == 0 ? f : rho.rho(r).apply(f);
  };

  StrongEquivalenceReport report{true, 0, MultiIndex(dim), MultiIndex(dim), Polynomial(dim)};
  bool stop = false;
  for_each_monomial_pair(dim, degree, stop, [&](const MultiIndex& k, const MultiIndex& l) {
    const Polynomial f = Polynomial::monomial(k, Rational(1));
    const Polynomial g = Polynomial::monomial(l, Rational(1));
    const Polynomial fg = f * g;
    for (int t = 0; t <= order && !stop; ++t) {
      Polynomial lhs(dim);
      for (int rs = 0; rs <= t; ++rs) {
        lhs += s.term(t - rs).apply(apply_rho(rho_a, rs, fg));
      }
      Polynomial rhs(dim);
      for (int r = 0; r <= t; ++r) {
        for (int af = 0; af + r <= t; ++af) {
          const int bf = t - r - af;
          rhs += apply_rho(rho_b, r, s.term(af).apply(f) * s.term(bf).apply(g));
        }
      }
      const Polynomial residual = lhs - rhs;
      if (!residual.is_zero()) {
        report = StrongEquivalenceReport{false, t, k, l, residual};
        stop = true;
      }
    }
  });
  return report;
}

MultiplicativityReport check_strong_multiplicativity(const OperatorSeries& s, int order,
                                                     int degree) {
  const int dim = s.dim();
  MultiplicativityReport report{true, 0, MultiIndex(dim), MultiIndex(dim), Polynomial(dim)};
  bool stop = false;
  for_each_monomial_pair(dim, degree, stop, [&](const MultiIndex& k, const MultiIndex& l) {
    const Polynomial f = Polynomial::monomial(k, Rational(1));
    const Polynomial g = Polynomial::monomial(l, Rational(1));
    for (int t = 0; t <= order && !stop; ++t) {
      Polynomial rhs(dim);
      for (int af = 0; af <= t; ++af) {
        rhs += s.term(af).apply(f) * s.term(t - af).apply(g);
      }
      const Polynomial residual = s.term(t).apply(f * g) - rhs;
      if (!residual.is_zero()) {
        report = MultiplicativityReport{false, t, k, l, residual};
        stop = true;
      }
    }
  });
  return report;
}

}  // namespace sunstar
