#include "doctest.h"

#include "sunstar/bch.hpp"
#include "sunstar/bernoulli.hpp"
#include "sunstar/lie_algebra.hpp"
#include "sunstar/poisson.hpp"

#include <random>
#include <stdexcept>
#include <vector>

using namespace sunstar;

namespace {

// Deterministic generators; raw engine draws reduced by hand so the stream
// is identical on every platform.
LinearForm random_form(std::mt19937_64& rng, int dim) {
  std::vector<Rational> coeffs;
  for (int i = 0; i < dim; ++i) {
    const int num = static_cast<int>(rng() % 9) - 4;
    const int den = 1 + static_cast<int>(rng() % 3);
    coeffs.push_back(Rational(num, den));
  }
  return LinearForm(std::move(coeffs));
}

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

}  // namespace

TEST_CASE("linear forms") {
  const LinearForm f({Rational(1), Rational(0), Rational(-1, 2)});
  CHECK(f.dim() == 3);
  CHECK(to_string(f) == "x1 - 1/2*x3");
  CHECK(to_string(f.to_polynomial()) == "x1 - 1/2*x3");
  CHECK(LinearForm::from_polynomial(f.to_polynomial()) == f);
  CHECK(LinearForm::basis(3, 1).to_polynomial() == Polynomial::variable(3, 1));

  const LinearForm g({Rational(2), Rational(1), Rational(0)});
  CHECK((f + g).coeff(0) == Rational(3));
  CHECK((f - g).coeff(1) == Rational(-1));
  CHECK((f * Rational(-2)).coeff(2) == Rational(1));
  CHECK((f - f).is_zero());

  Polynomial quadratic = Polynomial::variable(2, 0) * Polynomial::variable(2, 1);
  CHECK_THROWS_AS(LinearForm::from_polynomial(quadratic), std::invalid_argument);
  CHECK_THROWS_AS(LinearForm::from_polynomial(Polynomial::constant(2, Rational(1))),
                  std::invalid_argument);
}

TEST_CASE("lie algebra brackets") {
  const LieAlgebra heis = LieAlgebra::heisenberg();
  const LinearForm e1 = LinearForm::basis(3, 0);
  const LinearForm e2 = LinearForm::basis(3, 1);
  const LinearForm e3 = LinearForm::basis(3, 2);
  CHECK(heis.bracket(e1, e2) == e3);
  CHECK(heis.bracket(e2, e1) == -e3);
  CHECK(heis.bracket(e1, e3).is_zero());
  CHECK(heis.bracket(e2, e3).is_zero());

  const LieAlgebra su2 = LieAlgebra::su2();
  CHECK(su2.bracket(e1, e2) == e3);
  CHECK(su2.bracket(e2, e3) == e1);
  CHECK(su2.bracket(e3, e1) == e2);

  std::mt19937_64 rng(20260814ULL);
  for (int trial = 0; trial < 20; ++trial) {
    const LinearForm x = random_form(rng, 3);
    const LinearForm y = random_form(rng, 3);
    const LinearForm z = random_form(rng, 3);
    CHECK(su2.bracket(x, x).is_zero());
    // Jacobi as an operational identity.
    const LinearForm jac = su2.bracket(su2.bracket(x, y), z) +
                           su2.bracket(su2.bracket(y, z), x) +
                           su2.bracket(su2.bracket(z, x), y);
    CHECK(jac.is_zero());
  }

  const LieAlgebra flat = LieAlgebra::abelian(4);
  CHECK(flat.bracket(LinearForm::basis(4, 0), LinearForm::basis(4, 3)).is_zero());
}

TEST_CASE("lie algebra validation") {
  // i >= j is rejected: entries are declared above the diagonal only.
  CHECK_THROWS_AS(LieAlgebra(3, {{1, 0, 2, Rational(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra(3, {{0, 3, 2, Rational(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra(3, {{0, 1, 2, Rational(1)}, {0, 1, 2, Rational(2)}}),
                  std::invalid_argument);
  // [e1,e2] = e3 together with [e1,e3] = e1 violates Jacobi at (1,2,3).
  CHECK_THROWS_WITH_AS(LieAlgebra(3, {{0, 1, 2, Rational(1)}, {0, 2, 0, Rational(1)}}),
                       doctest::Contains("(1, 2, 3)"), std::invalid_argument);
}

TEST_CASE("ad powers") {
  const LieAlgebra heis = LieAlgebra::heisenberg();
  const LinearForm e1 = LinearForm::basis(3, 0);
  const LinearForm e2 = LinearForm::basis(3, 1);
  const LinearForm e3 = LinearForm::basis(3, 2);
  CHECK(heis.ad_power(e2, 0, e1) == e1);
  CHECK(heis.ad_power(e2, 1, e1) == -e3);
  CHECK(heis.ad_power(e2, 2, e1).is_zero());

  const LieAlgebra su2 = LieAlgebra::su2();
  CHECK(su2.ad_power(e1, 2, e2) == -e2);
  CHECK(su2.ad_power(e1, 4, e2) == e2);
  CHECK_THROWS_AS(su2.ad_power(e1, -1, e2), std::invalid_argument);
}

TEST_CASE("poisson structures") {
  const PoissonStructure symplectic = PoissonStructure::standard_symplectic(2);
  const Polynomial x1 = Polynomial::variable(2, 0);
  const Polynomial x2 = Polynomial::variable(2, 1);
  CHECK(symplectic.bracket(x1, x2) == Polynomial::constant(2, Rational(1)));
  CHECK(symplectic.bracket(x2, x1) == Polynomial::constant(2, Rational(-1)));
  CHECK(symplectic.is_constant());
  CHECK(symplectic.constant_entry(0, 1) == Rational(1));
  CHECK(symplectic.constant_entry(1, 0) == Rational(-1));
  CHECK(symplectic.constant_entry(0, 0) == Rational(0));

  const PoissonStructure heis = PoissonStructure::from_lie(LieAlgebra::heisenberg());
  CHECK(to_string(heis.bracket(Polynomial::variable(3, 0), Polynomial::variable(3, 1))) == "x3");
  CHECK(to_string(heis.entry(0, 1)) == "x3");
  CHECK_FALSE(heis.is_constant());
  CHECK_THROWS_AS(heis.constant_entry(0, 1), std::logic_error);

  std::mt19937_64 rng(7110ULL);
  const PoissonStructure su2 = PoissonStructure::from_lie(LieAlgebra::su2());
  for (int trial = 0; trial < 10; ++trial) {
    const Polynomial f = random_poly(rng, 3, 3, 3);
    const Polynomial g = random_poly(rng, 3, 3, 3);
    const Polynomial h = random_poly(rng, 3, 3, 3);
    CHECK(su2.bracket(f, f).is_zero());
    CHECK(su2.bracket(f, g) == -su2.bracket(g, f));
    // Biderivation in the second slot.
    CHECK(su2.bracket(f, g * h) == su2.bracket(f, g) * h + g * su2.bracket(f, h));
    // Jacobi as an operational identity.
    const Polynomial jac = su2.bracket(f, su2.bracket(g, h)) +
                           su2.bracket(g, su2.bracket(h, f)) +
                           su2.bracket(h, su2.bracket(f, g));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("jacobi reports") {
  const int n = 3;
  const Polynomial zero(n);
  const Polynomial x1 = Polynomial::variable(n, 0);
  const Polynomial x2 = Polynomial::variable(n, 1);
  const Polynomial one = Polynomial::constant(n, Rational(1));

  // Constant antisymmetric matrices pass outright.
  std::vector<std::vector<Polynomial>> constant_matrix = {
      {zero, one, one * Rational(2)},
      {-one, zero, one * Rational(-3)},
      {one * Rational(-2), one * Rational(3), zero}};
  CHECK(jacobi_check(constant_matrix).pass);

  // P12 = x1, P13 = x2, P23 = 1 fails at the triple (1,2,3).
  std::vector<std::vector<Polynomial>> bad = {
      {zero, x1, x2}, {-x1, zero, one}, {-x2, -one, zero}};
  const JacobiReport report = jacobi_check(bad);
  CHECK_FALSE(report.pass);
  CHECK(report.i == 0);
  CHECK(report.j == 1);
  CHECK(report.k == 2);
  CHECK(to_string(report.residual) == "-x2");
  CHECK_THROWS_WITH_AS(PoissonStructure{bad}, doctest::Contains("(1, 2, 3)"),
                       std::invalid_argument);

  // Antisymmetry violations are malformed input, not a report outcome.
  std::vector<std::vector<Polynomial>> skew = {{zero, x1, zero}, {x1, zero, zero},
                                               {zero, zero, zero}};
  CHECK_THROWS_AS(jacobi_check(skew), std::invalid_argument);
  std::vector<std::vector<Polynomial>> diag = {{one, x1, zero}, {-x1, zero, zero},
                                               {zero, zero, zero}};
  CHECK_THROWS_AS(jacobi_check(diag), std::invalid_argument);
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(6) == Rational(1, 42));
  CHECK(bernoulli(8) == Rational(-1, 30));
  CHECK(bernoulli(10) == Rational(5, 66));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  for (int k = 1; k <= 6; ++k) {
    CHECK(bernoulli(2 * k + 1) == Rational(0));
  }
  // Defining recurrence, n <= 12.
  for (int n = 1; n <= 12; ++n) {
    Rational sum(0);
    for (int k = 0; k <= n; ++k) {
      sum += Rational(binomial(n + 1, k)) * bernoulli(k);
    }
    CHECK(sum == Rational(0));
  }
  CHECK_THROWS_AS(bernoulli(-1), std::invalid_argument);
}

TEST_CASE("campbell-hausdorff coefficients") {
  BchContext heis(LieAlgebra::heisenberg());
  BchContext su2(LieAlgebra::su2());
  const LieAlgebra& g = su2.algebra();
  std::mt19937_64 rng(40923ULL);

  for (int trial = 0; trial < 10; ++trial) {
    const LinearForm x = random_form(rng, 3);
    const LinearForm y = random_form(rng, 3);
    CHECK(su2.c(1, x, y) == x + y);
    CHECK(heis.c(1, x, y) == x + y);
    // c2 = [X,Y]/2.
    CHECK(su2.c(2, x, y) == g.bracket(x, y) * Rational(1, 2));
    // c3 = ([X,[X,Y]] + [Y,[Y,X]])/12.
    const LinearForm expected3 =
        (g.bracket(x, g.bracket(x, y)) + g.bracket(y, g.bracket(y, x))) * Rational(1, 12);
    CHECK(su2.c(3, x, y) == expected3);
    // Vanishing on either degenerate argument.
    const LinearForm zero(3);
    for (int i = 2; i <= 6; ++i) {
      CHECK(su2.c(i, zero, x).is_zero());
      CHECK(su2.c(i, x, zero).is_zero());
    }
  }

  const LinearForm e1 = LinearForm::basis(3, 0);
  const LinearForm e2 = LinearForm::basis(3, 1);
  CHECK(heis.c(2, e1, e2) == LinearForm::basis(3, 2) * Rational(1, 2));
  // All deeper brackets land on the center and die.
  for (int i = 3; i <= 6; ++i) {
    CHECK(heis.c(i, e1, e2).is_zero());
  }

  BchContext flat(LieAlgebra::abelian(3));
  const LinearForm x = random_form(rng, 3);
  const LinearForm y = random_form(rng, 3);
  for (int i = 2; i <= 6; ++i) {
    CHECK(flat.c(i, x, y).is_zero());
  }

  BchContext capped(LieAlgebra::su2(), 4);
  CHECK(capped.c(4, x, y) == su2.c(4, x, y));
  CHECK_THROWS_AS(capped.c(5, x, y), std::invalid_argument);
  CHECK_THROWS_AS(su2.c(0, x, y), std::invalid_argument);
}

TEST_CASE("bigraded coefficient bins") {
  BchContext su2(LieAlgebra::su2());
  BchContext heis(LieAlgebra::heisenberg());
  std::mt19937_64 rng(55821ULL);

  for (int trial = 0; trial < 6; ++trial) {
    const LinearForm x = random_form(rng, 3);
    const LinearForm y = random_form(rng, 3);

    const std::vector<LinearForm> first = su2.c_bins(1, x, y);
    REQUIRE(first.size() == 2);
    CHECK(first[0] == y);
    CHECK(first[1] == x);

    for (BchContext* ctx : {&su2, &heis}) {
      for (int i = 2; i <= 5; ++i) {
        const std::vector<LinearForm> bins = ctx->c_bins(i, x, y);
        REQUIRE(bins.size() == static_cast<std::size_t>(i) + 1);
        LinearForm total(3);
        for (const LinearForm& part : bins) {
          total += part;
        }
        CHECK(total == ctx->c(i, x, y));
        // Both extreme bins are pure X- or Y-words, hence vanish for i >= 2.
        CHECK(bins[0].is_zero());
        CHECK(bins.back().is_zero());
        // The part linear in X is B_{i-1}/(i-1)! (ad_Y)^{i-1}(X).
        const LinearForm expected =
            ctx->algebra().ad_power(y, i - 1, x) *
            (bernoulli(i - 1) / Rational(factorial(i - 1)));
        CHECK(bins[1] == expected);
      }
    }
  }
}

TEST_CASE("z coefficients and f series") {
  BchContext su2(LieAlgebra::su2());
  BchContext heis(LieAlgebra::heisenberg());
  std::mt19937_64 rng(90217ULL);

  for (int trial = 0; trial < 6; ++trial) {
    const LinearForm x = random_form(rng, 3);
    const LinearForm y = random_form(rng, 3);
    CHECK(su2.z(0, x, y) == x + y);
    CHECK(su2.z(1, x, y) == su2.algebra().bracket(x, y));
    std::vector<LinearForm> bins = su2.z_bins(1, x, y);
    CHECK(bins[1] == su2.algebra().bracket(x, y));

    for (int r = 2; r <= 5; ++r) {
      CHECK(heis.z(r, x, y).is_zero());
    }

    CHECK(su2.f_series(0, x, y) == Polynomial::constant(3, Rational(1)));
    CHECK(su2.f_series(1, x, y) == su2.z(1, x, y).to_polynomial());
    const Polynomial z1 = su2.z(1, x, y).to_polynomial();
    const Polynomial z2 = su2.z(2, x, y).to_polynomial();
    CHECK(su2.f_series(2, x, y) == z2 + z1 * z1 * Rational(1, 2));
    // Recursive and explicit paths cross-check internally up to order 6.
    for (int r = 3; r <= 6; ++r) {
      CHECK_NOTHROW(su2.f_series(r, x, y));
      CHECK_NOTHROW(heis.f_series(r, x, y));
    }
  }
}
