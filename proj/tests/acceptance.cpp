// Acceptance gate: one pass/fail line per criterion, exact rational equality
// throughout.  Usage: acceptance <cli-binary> <golden-dir> <data-dir>.
// Exit status 0 iff every criterion passes.

#include "sunstar/bch.hpp"
#include "sunstar/bernoulli.hpp"
#include "sunstar/gutt.hpp"
#include "sunstar/moyal.hpp"
#include "sunstar/parse.hpp"
#include "sunstar/star_checks.hpp"
#include "sunstar/sun_checks.hpp"
#include "sunstar/sun_cochains.hpp"
#include "sunstar/sun_product.hpp"
#include "sunstar/twist.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace sunstar;

namespace {

int failures = 0;
std::string cli_path;
std::string golden_dir;
std::string data_dir;

void run_criterion(int number, const std::string& label, const std::function<bool()>& fn) {
  bool pass = false;
  std::string note;
  try {
    pass = fn();
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  std::printf("[%s] criterion %2d: %s%s\n", pass ? "PASS" : "FAIL", number, label.c_str(),
              note.c_str());
  std::fflush(stdout);
  if (!pass) {
    ++failures;
  }
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

LinearForm random_form(std::mt19937_64& rng, int dim) {
  std::vector<Rational> coeffs;
  for (int i = 0; i < dim; ++i) {
    const int num = static_cast<int>(rng() % 9) - 4;
    const int den = 1 + static_cast<int>(rng() % 3);
    coeffs.push_back(Rational(num, den));
  }
  return LinearForm(std::move(coeffs));
}

PoissonStructure symplectic(int dim) {
  std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(dim, Rational(0)));
  for (int i = 0; i + 1 < dim; i += 2) {
    m[i][i + 1] = Rational(1);
    m[i + 1][i] = Rational(-1);
  }
  return PoissonStructure::constant(m);
}

StarProductPtr pointwise_star(int dim) {
  return std::make_shared<MoyalStar>(PoissonStructure::constant(
      std::vector<std::vector<Rational>>(dim, std::vector<Rational>(dim, Rational(0)))));
}

// Moyal on R^2 twisted by T = I + nu d1^2.
StarProductPtr twisted_moyal() {
  OperatorSeries t = OperatorSeries::identity(2, 6);
  t.set_term(1, DiffOp::partial(2, MultiIndex({2, 0})));
  return apply_equivalence(t, std::make_shared<MoyalStar>(symplectic(2)));
}

// Gutt on su(2) twisted by T = I + nu d1^2 + nu^2 x1 d2^3.
StarProductPtr twisted_gutt_su2() {
  OperatorSeries t = OperatorSeries::identity(3, 6);
  t.set_term(1, DiffOp::partial(3, MultiIndex({2, 0, 0})));
  t.set_term(2, DiffOp::term(Polynomial::variable(3, 0), MultiIndex({0, 3, 0})));
  return apply_equivalence(t, std::make_shared<GuttStar>(LieAlgebra::su2()));
}

Rational factorial(int n) {
  Rational value(1);
  for (int i = 2; i <= n; ++i) {
    value = value * Rational(i);
  }
  return value;
}

Rational binomial(int n, int k) {
  Rational value(1);
  for (int i = 0; i < k; ++i) {
    value = value * Rational(n - i) / Rational(i + 1);
  }
  return value;
}

bool criterion1_star_axioms() {
  struct Entry {
    StarProductPtr star;
    int dim;
  };
  std::vector<Entry> entries;
  entries.push_back({std::make_shared<MoyalStar>(symplectic(2)), 2});
  entries.push_back({std::make_shared<MoyalStar>(symplectic(4)), 4});
  entries.push_back({std::make_shared<GuttStar>(LieAlgebra::abelian(3)), 3});
  entries.push_back({std::make_shared<GuttStar>(LieAlgebra::heisenberg()), 3});
  entries.push_back({std::make_shared<GuttStar>(LieAlgebra::su2()), 3});
  std::mt19937_64 rng(101);
  for (const Entry& entry : entries) {
    const StarProduct& star = *entry.star;
    for (int trial = 0; trial < 10; ++trial) {
      const Polynomial f = random_poly(rng, entry.dim, 4, 3);
      const Polynomial g = random_poly(rng, entry.dim, 4, 3);
      const Polynomial h = random_poly(rng, entry.dim, 4, 3);
      if (!check_associativity(star, f, g, h, 5).pass) {
        return false;
      }
    }
    const Polynomial one = Polynomial::constant(entry.dim, Rational(1));
    for (int trial = 0; trial < 5; ++trial) {
      const Polynomial f = random_poly(rng, entry.dim, 4, 3);
      const Polynomial g = random_poly(rng, entry.dim, 4, 3);
      if (star.cochain(0, f, g) != f * g) {
        return false;
      }
      if (star.mul(f, one, 5) != NuSeries::from_polynomial(f, 5) ||
          star.mul(one, f, 5) != NuSeries::from_polynomial(f, 5)) {
        return false;
      }
      for (int r = 1; r <= 5; ++r) {
        if (!star.cochain(r, one, f).is_zero() || !star.cochain(r, f, one).is_zero()) {
          return false;
        }
      }
      const Polynomial antisym = star.cochain(1, f, g) - star.cochain(1, g, f);
      if (antisym != star.poisson().bracket(f, g) * Rational(2)) {
        return false;
      }
    }
  }
  return true;
}

bool criterion2_covariance() {
  for (const LieAlgebra& algebra : {LieAlgebra::heisenberg(), LieAlgebra::su2()}) {
    const GuttStar star(algebra);
    if (!check_covariance(star, algebra, 5).pass) {
      return false;
    }
  }
  return true;
}

bool criterion3_vanishing_class() {
  struct Entry {
    StarProductPtr star;
    int dim;
  };
  std::vector<Entry> entries;
  entries.push_back({std::make_shared<MoyalStar>(symplectic(2)), 2});
  entries.push_back({std::make_shared<GuttStar>(LieAlgebra::abelian(3)), 3});
  entries.push_back({std::make_shared<GuttStar>(LieAlgebra::heisenberg()), 3});
  entries.push_back({std::make_shared<GuttStar>(LieAlgebra::su2()), 3});
  for (const Entry& entry : entries) {
    if (!check_in_EP(entry.star, 5, 6).pass) {
      return false;
    }
    const SunProduct sun(entry.star, 5);
    bool ok = true;
    for_each_multi_index(entry.dim, 6, [&](const MultiIndex& k) {
      if (!ok) {
        return;
      }
      const FactorMultiset factors = lambda_factor(k);
      if (sun.symmetrized(factors) != symmetrized_star_oracle(*entry.star, factors, 5)) {
        ok = false;
      }
    });
    if (!ok) {
      return false;
    }
  }
  return true;
}

bool criterion4_power_identity() {
  std::mt19937_64 rng(104);
  for (const LieAlgebra& algebra : {LieAlgebra::heisenberg(), LieAlgebra::su2()}) {
    const GuttStar star(algebra);
    for (int trial = 0; trial < 10; ++trial) {
      const Polynomial x = random_form(rng, 3).to_polynomial();
      for (int m = 0; m <= 6; ++m) {
        if (star_power(star, x, m, 6) != NuSeries::from_polynomial(x.pow(m), 6)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool criterion5_reconstruction() {
  for (const StarProductPtr& star : {twisted_moyal(), twisted_gutt_su2()}) {
    const int dim = star->dim();
    const SunProduct sun(star, 4);
    SunCochains primary = extract_sun_cochains(sun, 4, 10);
    reconstruct_all(*star, primary, 10);
    bool ok = true;
    for (int r = 1; r <= 4 && ok; ++r) {
      const DiffOp& rho = primary.rho(r);
      for_each_multi_index(dim, 6, [&](const MultiIndex& k) {
        if (ok && rho.apply(Polynomial::monomial(k, Rational(1))) != primary.value(r, k)) {
          ok = false;
        }
      });
    }
    if (!ok) {
      return false;
    }
    SunCochains refit = extract_sun_cochains(sun, 4, 8);
    reconstruct_all(*star, refit, 8);
    for (int r = 1; r <= 4; ++r) {
      if (primary.rho(r) != refit.rho(r)) {
        return false;
      }
    }
  }
  return true;
}

bool criterion6_first_cochain_coboundary() {
  std::mt19937_64 rng(106);
  for (const StarProductPtr& star : {twisted_moyal(), twisted_gutt_su2()}) {
    const SunProduct sun(star, 1);
    const SunCochains cochains = extract_sun_cochains(sun, 1, 6);
    const DiffOp rho1 = reconstruct_cochain_diffop(*star, cochains, 1, 6);
    for (int trial = 0; trial < 25; ++trial) {
      const Polynomial f = random_poly(rng, star->dim(), 4, 3);
      const Polynomial g = random_poly(rng, star->dim(), 4, 3);
      if (!first_cochain_coboundary_residual(*star, rho1, f, g).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

bool criterion7_equivalence_pipeline() {
  for (const StarProductPtr& star : {twisted_moyal(), twisted_gutt_su2()}) {
    const EquivalenceToEp result = equivalence_to_EP(star, 4, 6);
    if (!check_in_EP(result.star_in_ep, 4, 6).pass) {
      return false;
    }
  }
  // The covariant twist of Gutt's product must land back on Gutt's product.
  const EquivalenceToEp covariant = equivalence_to_EP(twisted_gutt_su2(), 4, 6);
  const GuttStar gutt(LieAlgebra::su2());
  bool ok = true;
  for_each_multi_index(3, 6, [&](const MultiIndex& i) {
    for_each_multi_index(3, 6 - i.degree(), [&](const MultiIndex& j) {
      if (!ok) {
        return;
      }
      const Polynomial a = Polynomial::monomial(i, Rational(1));
      const Polynomial b = Polynomial::monomial(j, Rational(1));
      if (covariant.star_in_ep->mul(a, b, 4) != gutt.mul(a, b, 4)) {
        ok = false;
      }
    });
  });
  return ok;
}

bool criterion8_prescribed_cochains() {
  const DiffOp eta1 = DiffOp::partial(2, MultiIndex({2, 0}));
  const DiffOp eta2 = DiffOp::term(Polynomial::variable(2, 1), MultiIndex({3, 0}));
  const StarProductPtr built = build_star_with_cochains(
      std::make_shared<MoyalStar>(symplectic(2)), {eta1, eta2}, 4);
  const SunProduct sun(built, 2);
  const SunCochains table = extract_sun_cochains(sun, 2, 6);
  bool ok = true;
  for_each_multi_index(2, 6, [&](const MultiIndex& k) {
    if (!ok) {
      return;
    }
    const Polynomial mono = Polynomial::monomial(k, Rational(1));
    if (table.value(1, k) != eta1.apply(mono) || table.value(2, k) != eta2.apply(mono)) {
      ok = false;
    }
  });
  return ok;
}

bool criterion9_bch_suite() {
  if (bernoulli(1) != Rational(-1, 2)) {
    return false;
  }
  for (int n = 1; n <= 12; ++n) {
    Rational sum(0);
    for (int k = 0; k <= n; ++k) {
      sum = sum + binomial(n + 1, k) * bernoulli(k);
    }
    if (sum != Rational(0)) {
      return false;
    }
  }
  std::mt19937_64 rng(109);
  for (const LieAlgebra& algebra : {LieAlgebra::su2(), LieAlgebra::heisenberg()}) {
    BchContext bch(algebra, 8);
    const LinearForm zero(3);
    std::vector<std::pair<LinearForm, LinearForm>> pairs;
    pairs.emplace_back(LinearForm::basis(3, 0), LinearForm::basis(3, 1));
    pairs.emplace_back(random_form(rng, 3), random_form(rng, 3));
    pairs.emplace_back(random_form(rng, 3), random_form(rng, 3));
    for (const auto& [x, y] : pairs) {
      if (bch.c(1, x, y) != x + y) {
        return false;
      }
      if (bch.c(2, x, y) != algebra.bracket(x, y) * Rational(1, 2)) {
        return false;
      }
      for (int i = 2; i <= 5; ++i) {
        if (!bch.c(i, zero, y).is_zero() || !bch.c(i, x, zero).is_zero()) {
          return false;
        }
        const LinearForm derivative = bch.c_bins(i, x, y)[1];
        const LinearForm expected =
            algebra.ad_power(y, i - 1, x) * (bernoulli(i - 1) / factorial(i - 1));
        if (derivative != expected) {
          return false;
        }
      }
      for (int r = 0; r <= 6; ++r) {
        bch.f_series(r, x, y);  // throws if recursion and partition expansion split
      }
    }
  }
  return true;
}

bool criterion10_chs_suite() {
  std::mt19937_64 rng(110);
  for (const LieAlgebra& algebra : {LieAlgebra::su2(), LieAlgebra::heisenberg()}) {
    const GuttStar star(algebra);
    BchContext bch(algebra, 8);
    std::vector<std::pair<LinearForm, LinearForm>> pairs;
    pairs.emplace_back(LinearForm::basis(3, 0), LinearForm::basis(3, 1));
    pairs.emplace_back(random_form(rng, 3), random_form(rng, 3));
    pairs.emplace_back(random_form(rng, 3), random_form(rng, 3));
    for (const auto& [x, y] : pairs) {
      if (!check_chs(star, bch, x, y, 3, 5).pass) {
        return false;
      }
    }
  }
  return true;
}

bool criterion11_eco_suite() {
  std::mt19937_64 rng(111);
  for (const LieAlgebra& algebra : {LieAlgebra::su2(), LieAlgebra::heisenberg()}) {
    const GuttStar star(algebra);
    for (int trial = 0; trial < 10; ++trial) {
      const LinearForm x = random_form(rng, 3);
      const LinearForm y = random_form(rng, 3);
      if (!check_eco(star, algebra, x, y, 4, 6).pass) {
        return false;
      }
    }
    // B_3 = 0 makes the r = 3 cochains vanish on (linear, power) pairs.
    const Polynomial x = random_form(rng, 3).to_polynomial();
    const Polynomial y = random_form(rng, 3).to_polynomial();
    for (int m = 3; m <= 6; ++m) {
      if (!star.cochain(3, x, y.pow(m)).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

bool criterion12_weak_triviality() {
  std::mt19937_64 rng(112);
  for (const StarProductPtr& star : {twisted_moyal(), twisted_gutt_su2()}) {
    const SunProduct sun(star, 4);
    const OperatorSeries trivializer = weak_trivializer(sun, 4, 6);
    for (int trial = 0; trial < 25; ++trial) {
      const Polynomial f = random_poly(rng, star->dim(), 3, 3);
      const Polynomial g = random_poly(rng, star->dim(), 3, 3);
      if (trivializer.apply(sun.mul(f, g)) != NuSeries::from_polynomial(f * g, 4)) {
        return false;
      }
    }
    const SunProduct pointwise(pointwise_star(star->dim()), 4);
    if (!check_weak_equivalence(sun, pointwise, trivializer, 4, 6).pass) {
      return false;
    }
  }
  return true;
}

bool criterion13_strong_condition() {
  const SunProduct pointwise(pointwise_star(2), 5);
  const DiffOp euler = DiffOp::term(Polynomial::variable(2, 0), MultiIndex({1, 0}));
  const DiffOp shear = DiffOp::term(Polynomial::variable(2, 1), MultiIndex({1, 0}));
  for (const DiffOp& derivation : {euler, shear}) {
    const OperatorSeries exp = exp_series(derivation, 5);
    if (!check_strong_multiplicativity(exp, 5, 4).pass) {
      return false;
    }
    if (!check_strong_equivalence(pointwise, pointwise, exp, 5, 4).pass) {
      return false;
    }
  }
  OperatorSeries bad = OperatorSeries::identity(2, 5);
  bad.set_term(1, DiffOp::partial(2, MultiIndex({2, 0})));
  const MultiplicativityReport report = check_strong_multiplicativity(bad, 5, 4);
  if (report.pass || report.t != 1 || report.k != MultiIndex::unit(2, 0) ||
      report.l != MultiIndex::unit(2, 0)) {
    return false;
  }
  return !check_strong_equivalence(pointwise, pointwise, bad, 5, 4).pass;
}

struct CliResult {
  int exit_code;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string command = cli_path + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    throw std::runtime_error("cannot launch " + command);
  }
  std::string output;
  char buffer[512];
  while (std::fgets(buffer, sizeof(buffer), pipe) != nullptr) {
    output += buffer;
  }
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool criterion14_cli() {
  std::mt19937_64 rng(114);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = 1 + static_cast<int>(rng() % 3);
    const Polynomial p = random_poly(rng, dim, 5, 4);
    if (parse_polynomial(to_string(p), dim) != p) {
      return false;
    }
  }
  const struct {
    std::string args;
    std::string golden;
  } golden_cases[] = {
      {"--config " + data_dir + "/moyal_r2.json star-mul x1 x2", "star_mul_moyal.txt"},
      {"--config " + data_dir + "/heisenberg.json sun-mul x1 x2", "sun_mul_heisenberg.txt"},
      {"--config " + data_dir + "/su2.json verify eco", "verify_eco_su2.txt"},
  };
  for (const auto& c : golden_cases) {
    const CliResult result = run_cli(c.args);
    if (result.exit_code != 0 || result.output != read_file(golden_dir + "/" + c.golden)) {
      return false;
    }
  }
  if (run_cli("--config " + data_dir + "/su2.json verify covariance").exit_code != 0) {
    return false;
  }
  if (run_cli("--config " + data_dir + "/heisenberg.json --star twist:" + data_dir +
              "/twist_break_covariance.json verify covariance")
          .exit_code != 1) {
    return false;
  }
  if (run_cli("--config " + data_dir + "/bad_matrix.json star-mul x1 x2").exit_code != 2) {
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 4) {
    std::cerr << "usage: acceptance <cli-binary> <golden-dir> <data-dir>\n";
    return 2;
  }
  cli_path = argv[1];
  golden_dir = argv[2];
  data_dir = argv[3];

  run_criterion(1, "star-product axioms and associativity through nu^5",
                criterion1_star_axioms);
  run_criterion(2, "covariance of Gutt's product on Heisenberg and su(2)",
                criterion2_covariance);
  run_criterion(3, "Moyal and Gutt sun-cochains vanish; symmetrization matches the "
                   "permutation oracle",
                criterion3_vanishing_class);
  run_criterion(4, "star-powers of linear forms are classical powers",
                criterion4_power_identity);
  run_criterion(5, "cochain-operator reconstruction matches tables and is refit-stable",
                criterion5_reconstruction);
  run_criterion(6, "coboundary of rho_1 equals P - C_1 on random pairs",
                criterion6_first_cochain_coboundary);
  run_criterion(7, "equivalence pipeline lands in the vanishing class and recovers "
                   "Gutt's product",
                criterion7_equivalence_pipeline);
  run_criterion(8, "star built from prescribed cochains admits them as sun-cochains",
                criterion8_prescribed_cochains);
  run_criterion(9, "Campbell-Hausdorff coefficients, derivative identity, F-series, "
                   "Bernoulli recurrence",
                criterion9_bch_suite);
  run_criterion(10, "cochains on exponential bins match the F-series expansion",
                criterion10_chs_suite);
  run_criterion(11, "closed form of cochains on (linear, power) pairs",
                criterion11_eco_suite);
  run_criterion(12, "weak trivializer flattens sun-products and passes weak equivalence",
                criterion12_weak_triviality);
  run_criterion(13, "strong-equivalence necessary condition and its failure witness",
                criterion13_strong_condition);
  run_criterion(14, "CLI round-trip, golden outputs, and exit codes", criterion14_cli);

  if (failures == 0) {
    std::printf("acceptance: all 14 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", failures);
  return 1;
}
