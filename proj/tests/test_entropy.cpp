#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bellkit/entropy.hpp"
#include "bellkit/errors.hpp"
#include "bellkit/random.hpp"
#include "bellkit/sweep.hpp"
#include "oracles.hpp"

using namespace bellkit;

namespace {

const double kLn2 = std::log(2.0);

BellScenario random_traceless(Bipartition dims, Rng& rng) {
  auto obs = [&](std::size_t n) { return random_dichotomic(n, true, rng); };
  ComplexMatrix a = obs(dims.first), c = obs(dims.first), b = obs(dims.second), d = obs(dims.second);
  return BellScenario(a, c, b, d, random_test_state(dims.total(), rng));
}

// Werner purities: Tr rho12^2 = (1 + 3 w^2) / 4, both marginals I/2.
double werner_linear_s12(double w) { return 1.0 - (1.0 + 3.0 * w * w) / 4.0; }

}  // namespace

TEST_CASE("singlet entropies") {
  const auto r = entropy_report(presets::singlet(), {2, 2}, EntropyKind::VonNeumann);
  CHECK(std::abs(r.S12) < 1e-10);
  CHECK(std::abs(r.S1 - kLn2) < 1e-10);
  CHECK(std::abs(r.S2 - kLn2) < 1e-10);
  const auto bits = entropy_report(presets::singlet(), {2, 2}, EntropyKind::VonNeumann, LogBase::Two);
  CHECK(std::abs(bits.S1 - 1.0) < 1e-10);
  const auto lin = entropy_report(presets::singlet(), {2, 2}, EntropyKind::LinearQuantum);
  CHECK(std::abs(lin.S12) < 1e-12);
  CHECK(std::abs(lin.S1 - 0.5) < 1e-12);

  CHECK(quantum_monotonicity(presets::singlet(), {2, 2}) == doctest::Approx(-kLn2).epsilon(1e-10));
  CHECK(std::abs(araki_lieb(presets::singlet(), {2, 2})) < 1e-10);
  CHECK(check_subadditivity(presets::singlet(), {2, 2}, EntropyKind::VonNeumann) ==
        doctest::Approx(2 * kLn2).epsilon(1e-10));
}

TEST_CASE("classical examples") {
  const ClassicalDistribution uniform({0.25, 0.25, 0.25, 0.25}, {2, 2});
  CHECK(shannon_entropy(uniform) == doctest::Approx(std::log(4.0)));
  CHECK(shannon_entropy(uniform, LogBase::Two) == doctest::Approx(2.0));
  CHECK(linear_entropy_classical(uniform) == doctest::Approx(0.75));
  CHECK(check_subadditivity(uniform, EntropyKind::Shannon) == doctest::Approx(0.0).scale(1.0));

  const ClassicalDistribution correlated({0.5, 0.0, 0.0, 0.5}, {2, 2});
  CHECK(classical_monotonicity(correlated) == doctest::Approx(0.0).scale(1.0));
  const auto r = entropy_report(correlated, EntropyKind::Shannon);
  CHECK(r.S12 == doctest::Approx(kLn2));
  CHECK(r.S1 == doctest::Approx(kLn2));

  const ClassicalDistribution point({0.0, 1.0, 0.0, 0.0}, {2, 2});
  CHECK(shannon_entropy(point) == 0.0);
  CHECK(max_abs_diff(point.as_density().matrix(), ComplexMatrix::diagonal(std::vector<double>{0, 1, 0, 0})) == 0.0);

  CHECK_THROWS_AS(ClassicalDistribution({0.5, 0.6}), InvalidInput);
  CHECK_THROWS_AS(ClassicalDistribution({1.2, -0.2}), InvalidInput);
  CHECK_THROWS_AS(ClassicalDistribution({0.5, 0.5}, Bipartition{2, 2}), DimensionError);
  CHECK_THROWS_AS(entropy(presets::mixed(), EntropyKind::Shannon), InvalidInput);
}

TEST_CASE("entropies match the reference spectra") {
  Rng rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const auto rho = random_test_state(6, rng);
    CHECK(von_neumann_entropy(rho) == doctest::Approx(oracle::von_neumann(rho.matrix())).epsilon(1e-10));
    const auto p = random_probability_vector(6, rng);
    CHECK(shannon_entropy(ClassicalDistribution(p)) == doctest::Approx(oracle::shannon(p)).epsilon(1e-12));
  }
}

TEST_CASE("unitary invariance") {
  Rng rng(62);
  for (int trial = 0; trial < 20; ++trial) {
    const auto rho = random_density(4, rng);
    const auto u = random_unitary(4, rng);
    const ComplexMatrix rotated = u * rho.matrix() * u.adjoint();
    const DensityOperator r2((rotated + rotated.adjoint()) * Complex(0.5));
    CHECK(von_neumann_entropy(r2) == doctest::Approx(von_neumann_entropy(rho)).epsilon(1e-10));
    CHECK(linear_entropy_quantum(r2) == doctest::Approx(linear_entropy_quantum(rho)).epsilon(1e-12));
  }
}

TEST_CASE("concavity, subadditivity and Araki-Lieb on random inputs") {
  Rng rng(63);
  const std::vector<double> grid{0.0, 0.25, 0.5, 0.75, 1.0};
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_test_state(4, rng), b = random_test_state(4, rng);
    CHECK(check_concavity(a, b, grid, EntropyKind::VonNeumann) >= -1e-10);
    CHECK(check_concavity(a, b, grid, EntropyKind::LinearQuantum) >= -1e-10);
    CHECK(check_subadditivity(a, {2, 2}, EntropyKind::VonNeumann) >= -1e-10);
    CHECK(check_subadditivity(a, {2, 2}, EntropyKind::LinearQuantum) >= -1e-10);
    CHECK(araki_lieb(a, {2, 2}) >= -1e-10);
    const ClassicalDistribution p(random_probability_vector(6, rng), {2, 3}, 1e-10);
    CHECK(classical_monotonicity(p) >= -1e-10);
    CHECK(classical_monotonicity(p, EntropyKind::LinearClassical) >= -1e-10);
  }
}

TEST_CASE("purity quadratic is nonnegative on a parameter grid") {
  Rng rng(64);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = random_traceless({2, 2}, rng);
    for (const double lambda : {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0}) CHECK(purity_quadratic(s, lambda) >= -1e-10);
  }
}

TEST_CASE("purity bound on the CHSH value") {
  Rng rng(65);
  for (const Bipartition dims : {Bipartition{2, 2}, Bipartition{2, 4}, Bipartition{4, 2}, Bipartition{4, 4}}) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto r = purity_bound_check(random_traceless(dims, rng));
      CHECK(r.traceless);
      CHECK(r.slack >= -1e-9);
    }
  }
  const auto s = BellScenario::from_settings(presets::singlet(),
                                             {direction_from_angles(0, 0), direction_from_angles(90, 0),
                                              direction_from_angles(45, 0), direction_from_angles(135, 0)});
  const auto r = purity_bound_check(s);
  CHECK(r.lhs == doctest::Approx(2.0));  // 4 * 1 - 2 * 0.5 - 2 * 0.5
  CHECK(r.rhs == doctest::Approx(1.0));  // (8 - 4) / 4
  CHECK(r.slack == doctest::Approx(1.0));

  // Werner family at its optimal settings: slack is exactly w^2.
  for (const double w : {0.3, 0.8}) {
    const auto opt = maximize_violation(presets::werner(w), 0);
    const auto rw = purity_bound_check(BellScenario::from_settings(presets::werner(w), opt.directions));
    CHECK(rw.slack == doctest::Approx(w * w).epsilon(1e-9));
  }
}

TEST_CASE("purity combination weights follow the subsystem dimensions") {
  // rho1 pure on C^2, rho2 = I/4 on C^4: 8 * (1/4) - 2 * 1 - 4 * (1/4) = -1.
  const DensityOperator rho = tensor_product(PureState::basis(2, 0).density(), DensityOperator::maximally_mixed(4));
  CHECK(purity_combination(rho, {2, 4}) == doctest::Approx(-1.0));
}

TEST_CASE("the purity bound needs traceless observables") {
  const ComplexMatrix id = ComplexMatrix::identity(2);
  const auto r = purity_bound_check(BellScenario(id, id, id, id, presets::mixed()));
  CHECK_FALSE(r.traceless);
  CHECK(r.beta == doctest::Approx(2.0));
  CHECK(r.lhs == doctest::Approx(-1.0));
  CHECK(r.slack == doctest::Approx(-1.0));
}

TEST_CASE("linear-entropy condition on Werner states switches at w = 1/sqrt(3)") {
  const double edge = 1.0 / std::sqrt(3.0);
  for (const double w : {0.0, 0.3, edge - 1e-6, edge + 1e-6, 0.7, 1.0}) {
    const auto v = linear_entropy_condition(presets::werner(w), {2, 2});
    CAPTURE(w);
    CHECK(v.holds == (w < edge));
    CHECK(v.beta_bound_implied == v.holds);
    CHECK(v.lhs - v.rhs == doctest::Approx(v.purity_margin).epsilon(1e-12));
    CHECK(v.lhs == doctest::Approx(4 * werner_linear_s12(w) + 4 - 2 - 2).epsilon(1e-12));
    if (v.holds) CHECK(maximize_violation(presets::werner(w), 0).beta_max <= 2.0 + 1e-6);
  }
}

TEST_CASE("subsystem condition: linear entropy excludes violation, von Neumann does not") {
  // Werner w = 0.72: S12 = 0.7446 >= ln 2 = S1, yet the CHSH maximum is 2 sqrt(2) * 0.72 = 2.036.
  const auto rho = presets::werner(0.72);
  const auto vn = horodecki_check(rho, {2, 2}, EntropyKind::VonNeumann);
  CHECK(vn.condition_holds);
  CHECK(vn.entropies.S12 == doctest::Approx(0.7446).epsilon(1e-3));
  CHECK(maximize_violation(rho, 0).beta_max == doctest::Approx(2.0 * std::numbers::sqrt2 * 0.72).epsilon(1e-9));
  CHECK_FALSE(horodecki_check(rho, {2, 2}).condition_holds);

  for (const double w : {0.2, 0.5, 0.57}) {
    CHECK(horodecki_check(presets::werner(w), {2, 2}).condition_holds);
    CHECK(maximize_violation(presets::werner(w), 0).beta_max <= 2.0);
  }
}
