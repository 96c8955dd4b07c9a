#include "doctest.h"

#include "sunstar/fit.hpp"
#include "sunstar/hochschild.hpp"
#include "sunstar/operator_series.hpp"

#include <random>

using namespace sunstar;

namespace {

Polynomial random_poly(std::mt19937_64& rng, int dim, int max_degree, int terms) {
  Polynomial p(dim);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> exps(dim, 0);
    int budget = static_cast<int>(rng() % (max_degree + 1));
    for (int i = 0; i < dim && budget > 0; ++i) {
      const int e = static_cast<int>(rng() % (budget + 1));
      exps[i] = e;
      budget -= e;
    }
    const int num = static_cast<int>(rng() % 13) - 6;
    const int den = 1 + static_cast<int>(rng() % 3);
    p.add_term(MultiIndex(exps), Rational(num, den));
  }
  return p;
}

DiffOp random_diffop(std::mt19937_64& rng, int dim, int max_order, int terms) {
  DiffOp op(dim);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> exps(dim, 0);
    int budget = 1 + static_cast<int>(rng() % max_order);
    for (int i = 0; i < dim && budget > 0; ++i) {
      const int e = static_cast<int>(rng() % (budget + 1));
      exps[i] = e;
      budget -= e;
    }
    if (MultiIndex(exps).is_zero()) {
      exps[0] = 1;
    }
    op.add_term(MultiIndex(exps), random_poly(rng, dim, 2, 2));
  }
  return op;
}

}  // namespace

TEST_CASE("differential operator action") {
  // x1 * d2^3 applied to x2^3 gives 6 x1.
  const DiffOp op =
      DiffOp::term(Polynomial::variable(2, 0), MultiIndex({0, 3}));
  const Polynomial x2cubed = Polynomial::monomial(MultiIndex({0, 3}), 1);
  CHECK(op.apply(x2cubed) == Rational(6) * Polynomial::variable(2, 0));
  CHECK(op.apply(Polynomial::variable(2, 0)).is_zero());
  CHECK(op.order() == 3);
  CHECK(op.annihilates_constants());
  CHECK(op.annihilates_linear());

  const DiffOp id = DiffOp::identity(2);
  CHECK_FALSE(id.annihilates_constants());
  CHECK(id.apply(x2cubed) == x2cubed);
  CHECK(to_string(op) == "x1*d2^3");
  CHECK(to_string(op - op) == "0");
  CHECK(to_string(DiffOp::partial(2, MultiIndex({2, 0})) -
                  DiffOp::term(Polynomial::variable(2, 0), MultiIndex({0, 3}))) ==
        "-x1*d2^3 + d1^2");
}

TEST_CASE("composition expands with the Leibniz rule") {
  const DiffOp d1 = DiffOp::partial(2, MultiIndex({1, 0}));
  const DiffOp x1d1 =
      DiffOp::term(Polynomial::variable(2, 0), MultiIndex({1, 0}));

  // d1 ∘ (x1 d1) = d1 + x1 d1^2, while (x1 d1) ∘ d1 = x1 d1^2.
  DiffOp expected(2);
  expected.add_term(MultiIndex({1, 0}), Polynomial::constant(2, 1));
  expected.add_term(MultiIndex({2, 0}), Polynomial::variable(2, 0));
  CHECK(compose(d1, x1d1) == expected);
  CHECK(compose(x1d1, d1) ==
        DiffOp::term(Polynomial::variable(2, 0), MultiIndex({2, 0})));
  CHECK(compose(d1, x1d1) - compose(x1d1, d1) == d1);

  // d1^2 ∘ (x1^2 d2) = x1^2 d1^2 d2 + 4 x1 d1 d2 + 2 d2.
  const DiffOp a = DiffOp::partial(2, MultiIndex({2, 0}));
  const DiffOp b =
      DiffOp::term(Polynomial::variable(2, 0) * Polynomial::variable(2, 0),
                   MultiIndex({0, 1}));
  DiffOp ab(2);
  ab.add_term(MultiIndex({2, 1}),
              Polynomial::variable(2, 0) * Polynomial::variable(2, 0));
  ab.add_term(MultiIndex({1, 1}), Rational(4) * Polynomial::variable(2, 0));
  ab.add_term(MultiIndex({0, 1}), Polynomial::constant(2, 2));
  CHECK(compose(a, b) == ab);
}

TEST_CASE("composition agrees with sequential application") {
  std::mt19937_64 rng(11u);
  for (int trial = 0; trial < 15; ++trial) {
    const DiffOp a = random_diffop(rng, 2, 3, 2);
    const DiffOp b = random_diffop(rng, 2, 3, 2);
    const Polynomial f = random_poly(rng, 2, 5, 3);
    CHECK(compose(a, b).apply(f) == a.apply(b.apply(f)));
    const DiffOp c = random_diffop(rng, 2, 2, 2);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("hochschild coboundary") {
  // dT(f,g) = f T(g) - T(fg) + T(f) g with T = d^2 in one variable:
  // dT(x, x) = -2.
  const DiffOp t = DiffOp::partial(1, MultiIndex({2}));
  const Cochain2 dt = hochschild_coboundary(t);
  const Polynomial x = Polynomial::variable(1, 0);
  CHECK(dt(x, x) == Polynomial::constant(1, -2));

  // A derivation has vanishing coboundary.
  const DiffOp derivation =
      DiffOp::term(Polynomial::variable(2, 1), MultiIndex({1, 0}));
  const Cochain2 dd = hochschild_coboundary(derivation);
  std::mt19937_64 rng(3u);
  for (int trial = 0; trial < 10; ++trial) {
    const Polynomial f = random_poly(rng, 2, 4, 3);
    const Polynomial g = random_poly(rng, 2, 4, 3);
    CHECK(dd(f, g).is_zero());
  }
}

TEST_CASE("coboundary of a coboundary vanishes") {
  std::mt19937_64 rng(5u);
  for (int trial = 0; trial < 10; ++trial) {
    const DiffOp t = random_diffop(rng, 2, 3, 2);
    const Cochain3 ddt = hochschild_coboundary(hochschild_coboundary(t));
    const Polynomial f = random_poly(rng, 2, 3, 2);
    const Polynomial g = random_poly(rng, 2, 3, 2);
    const Polynomial h = random_poly(rng, 2, 3, 2);
    CHECK(ddt(f, g, h).is_zero());
  }
}

TEST_CASE("operator series inversion") {
  OperatorSeries t = OperatorSeries::identity(2, 3);
  t.set_term(1, DiffOp::partial(2, MultiIndex({2, 0})));

  const OperatorSeries u = inverse(t, 3);
  CHECK(u.term(1) == DiffOp::partial(2, MultiIndex({2, 0})) * Rational(-1));
  CHECK(u.term(2) == DiffOp::partial(2, MultiIndex({4, 0})));
  CHECK(u.term(3) == DiffOp::partial(2, MultiIndex({6, 0})) * Rational(-1));
  CHECK(compose(t, u, 3) == OperatorSeries::identity(2, 3));
  CHECK(compose(u, t, 3) == OperatorSeries::identity(2, 3));

  std::mt19937_64 rng(17u);
  for (int trial = 0; trial < 8; ++trial) {
    OperatorSeries s = OperatorSeries::identity(2, 4);
    s.set_term(1, random_diffop(rng, 2, 2, 2));
    s.set_term(3, random_diffop(rng, 2, 2, 1));
    const OperatorSeries s_inv = inverse(s, 4);
    const NuSeries f = NuSeries::from_polynomial(random_poly(rng, 2, 4, 3), 4);
    CHECK(s.apply(s_inv.apply(f)) == f);
    CHECK(s_inv.apply(s.apply(f)) == f);
  }
}

TEST_CASE("operator series validation") {
  OperatorSeries t = OperatorSeries::identity(2, 2);
  CHECK_THROWS_AS(t.set_term(1, DiffOp::identity(2)), std::invalid_argument);
  CHECK_THROWS_AS(t.set_term(0, DiffOp(2)), std::out_of_range);
  CHECK(t.term(7).is_zero());

  t.set_term(1, DiffOp::partial(2, MultiIndex({2, 0})));
  CHECK(t.fixes_linear());
  t.set_term(2, DiffOp::partial(2, MultiIndex({1, 0})));
  CHECK_FALSE(t.fixes_linear());
}

TEST_CASE("exponential of a derivation") {
  const DiffOp x1d1 =
      DiffOp::term(Polynomial::variable(2, 0), MultiIndex({1, 0}));
  const OperatorSeries s = exp_series(x1d1, 3);
  // exp(nu x1 d1) x1^2 = x1^2 (1 + nu)^... : term r applies (x1 d1)^r / r!.
  const Polynomial x1sq = Polynomial::monomial(MultiIndex({2, 0}), 1);
  const NuSeries image = s.apply(x1sq, 3);
  CHECK(image.coeff(0) == x1sq);
  CHECK(image.coeff(1) == Rational(2) * x1sq);
  CHECK(image.coeff(2) == Rational(2) * x1sq);
  CHECK(image.coeff(3) == Rational(4, 3) * x1sq);
}

TEST_CASE("operator fit recovers differential operators") {
  DiffOp truth(2);
  truth.add_term(MultiIndex({1, 0}), Polynomial::variable(2, 0));
  truth.add_term(MultiIndex({0, 2}), Polynomial::constant(2, 1));

  const auto probe = [&](const Polynomial& f) { return truth.apply(f); };
  CHECK(fit_diffop(probe, 2, 4, 3) == truth);

  // Identity probe: rejected unless constants are admitted.
  const auto id_probe = [](const Polynomial& f) { return f; };
  CHECK_THROWS_AS(fit_diffop(id_probe, 2, 3, 2), std::invalid_argument);
  CHECK(fit_diffop(id_probe, 2, 3, 2, true) == DiffOp::identity(2));

  // Order cap below the true order: the tail-degree check reports a witness.
  const DiffOp high = DiffOp::partial(2, MultiIndex({4, 0}));
  const auto high_probe = [&](const Polynomial& f) { return high.apply(f); };
  try {
    fit_diffop(high_probe, 2, 4, 2);
    CHECK(false);
  } catch (const FitError& e) {
    CHECK(e.witness() == MultiIndex({4, 0}));
  }
}

TEST_CASE("operator fit round trip on random operators") {
  std::mt19937_64 rng(23u);
  for (int trial = 0; trial < 10; ++trial) {
    const DiffOp truth = random_diffop(rng, 2, 3, 3);
    const auto probe = [&](const Polynomial& f) { return truth.apply(f); };
    CHECK(fit_diffop(probe, 2, 5, 3) == truth);
  }
}
