#include <doctest.h>

#include <cmath>

#include "bellkit/errors.hpp"
#include "bellkit/feasibility.hpp"
#include "bellkit/simplex.hpp"
#include "bellkit/sweep.hpp"

using namespace bellkit;

namespace {

// Marginals with pX = 1/2 and the given correlations <ab>, <bc>, <cd>, <ad>.
MarginalSet unbiased(double ab, double bc, double cd, double ad) {
  auto pair = [](double corr) { return (corr + 1.0) / 4.0; };
  return {0.5, 0.5, 0.5, 0.5, pair(ab), pair(ad), pair(bc), pair(cd)};
}

MarginalSet from_joint(const std::vector<double>& w) {
  JointDistribution q;
  std::copy(w.begin(), w.end(), q.q.begin());
  return q.measurable();
}

BellScenario canonical_singlet() {
  return BellScenario::from_settings(presets::singlet(),
                                     {direction_from_angles(0, 0), direction_from_angles(90, 0),
                                      direction_from_angles(45, 0), direction_from_angles(135, 0)});
}

}  // namespace

TEST_CASE("phase-1 simplex on tiny systems") {
  // x1 + x2 = 1, x1 - x2 = 0.5: x = (0.75, 0.25).
  const auto ok = phase1_feasibility(2, 2, {1, 1, 1, -1}, {1, 0.5}, 1e-9);
  CHECK(ok.feasible);
  CHECK(ok.x[0] == doctest::Approx(0.75));
  CHECK(ok.x[1] == doctest::Approx(0.25));
  // x1 + x2 = 1, x1 - x2 = 3 needs x2 < 0.
  CHECK_FALSE(phase1_feasibility(2, 2, {1, 1, 1, -1}, {1, 3}, 1e-9).feasible);
  // Negative right-hand sides are handled by row flips.
  CHECK(phase1_feasibility(1, 2, {-1, -1}, {-2}, 1e-9).feasible);
}

TEST_CASE("product-state marginals are feasible with a faithful witness") {
  const double pA = 0.3, pB = 0.6, pC = 0.5, pD = 0.2;
  const MarginalSet m{pA, pB, pC, pD, pA * pB, pA * pD, pB * pC, pC * pD};
  const auto v = joint_feasible(m);
  CHECK(v.feasible);
  CHECK(v.fine_criterion);
  REQUIRE(v.witness);
  CHECK(marginal_residual(*v.witness, m) < 1e-9);
  CHECK(chain_violation(*v.witness) <= 1e-12);
  for (const double q : v.witness->q) CHECK(q >= -1e-12);
}

TEST_CASE("singlet at the canonical angles: infeasible and fails the four-inequality test") {
  const MarginalSet m = marginals_from_scenario(canonical_singlet());
  const auto v = joint_feasible(m);
  CHECK_FALSE(v.feasible);
  CHECK_FALSE(v.fine_criterion);
  CHECK_FALSE(v.witness);
  CHECK(v.phase1_objective > 1e-3);
  double worst = 0;
  for (const double c : v.chsh_values) worst = std::max(worst, std::abs(c));
  CHECK(worst == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));

  const auto report = contextuality_demo(canonical_singlet());
  CHECK(report.contextual);
  CHECK(report.context_ab.check.max_error < 1e-9);
  CHECK(report.context_ad.check.max_error < 1e-9);
}

TEST_CASE("independent uniform marginals: every CHSH variant is zero") {
  const auto v = joint_feasible(unbiased(0, 0, 0, 0));
  CHECK(v.feasible);
  CHECK(v.fine_criterion);
  for (const double c : v.chsh_values) CHECK(std::abs(c) < 1e-15);
}

TEST_CASE("boundary: CHSH exactly 2 is feasible, just above is not") {
  // Deterministic all-true assignment: correlations 1, 1, 1, 1 give CHSH 2.
  std::vector<double> w(16, 0.0);
  w[15] = 1.0;
  const auto edge = joint_feasible(from_joint(w));
  CHECK(edge.feasible);
  CHECK(edge.fine_criterion);
  CHECK(edge.chsh_values[0] == doctest::Approx(2.0));

  // Box with correlations (1, 1, 1, -1) mixed with white noise: CHSH = 4 v.
  for (const double eps : {1e-3, 1e-6}) {
    const double below = 0.5 - eps / 4, above = 0.5 + eps / 4;
    const auto in = joint_feasible(unbiased(below, below, below, -below));
    const auto out = joint_feasible(unbiased(above, above, above, -above));
    CAPTURE(eps);
    CHECK(in.feasible);
    CHECK(in.fine_criterion);
    CHECK(marginal_residual(*in.witness, unbiased(below, below, below, -below)) < 1e-9);
    CHECK_FALSE(out.feasible);
    CHECK_FALSE(out.fine_criterion);
  }
  const auto box = joint_feasible(unbiased(1, 1, 1, -1));
  CHECK_FALSE(box.feasible);
  CHECK(box.chsh_values[0] == doctest::Approx(4.0));
}

TEST_CASE("random 16-atom joints always round-trip") {
  Rng rng(51);
  for (int trial = 0; trial < 500; ++trial) {
    const auto w = random_probability_vector(16, rng);
    const MarginalSet m = from_joint(w);
    const auto v = joint_feasible(m);
    CHECK(v.feasible);
    CHECK(v.fine_criterion);
    REQUIRE(v.witness);
    CHECK(marginal_residual(*v.witness, m) < 1e-9);
    CHECK(chain_violation(*v.witness) < 1e-9);
  }
}

TEST_CASE("LP and the four-inequality criterion agree on quantum marginals") {
  Rng rng(52);
  int infeasible = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto rho = random_test_state(4, rng);
    const auto s = BellScenario::from_settings(
        rho, {random_direction(rng), random_direction(rng), random_direction(rng), random_direction(rng)});
    const auto m = marginals_from_scenario(s);
    const auto v = joint_feasible(m);
    CHECK(v.feasible == v.fine_criterion);
    if (v.witness) CHECK(marginal_residual(*v.witness, m) < 1e-9);
    infeasible += v.feasible ? 0 : 1;
  }
  CHECK(infeasible > 0);  // the sample does reach the nonlocal region
}

TEST_CASE("inconsistent marginals are an input error, not a Bell violation") {
  MarginalSet m = unbiased(0, 0, 0, 0);
  m.pAB = 0.7;  // exceeds pA
  CHECK_THROWS_AS(joint_feasible(m), InconsistentMarginals);
  m = unbiased(0, 0, 0, 0);
  m.pC = 1.2;
  CHECK_THROWS_AS(joint_feasible(m), InconsistentMarginals);
  m = MarginalSet{0.9, 0.9, 0.5, 0.5, 0.7, 0.45, 0.45, 0.25};  // pAB < pA + pB - 1
  CHECK_THROWS_AS(m.validate(), InconsistentMarginals);
}

TEST_CASE("chain violation flags a non-probability table") {
  JointDistribution q;
  q.q[15] = 1.2;
  q.q[0] = -0.2;
  CHECK(chain_violation(q) > 0.1);
}

TEST_CASE("pairs on one side are not jointly measurable") {
  const auto s = canonical_singlet();
  CHECK_THROWS_AS(pair_probability(s, Observable::A, Observable::C), CommutationError);
  CHECK_THROWS_AS(pair_probability(s, Observable::B, Observable::D), CommutationError);
  CHECK(single_probability(s, Observable::A) == doctest::Approx(0.5));
}
