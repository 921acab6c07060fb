#include <doctest.h>

#include <cmath>
#include <numeric>

#include "bellkit/errors.hpp"
#include "bellkit/hidden_variables.hpp"
#include "bellkit/random.hpp"

using namespace bellkit;

namespace {

// U diag(v) U^dagger with entries of v drawn from a small set so that
// degenerate eigenspaces are common.
ComplexMatrix commuting_member(const ComplexMatrix& u, Rng& rng) {
  static constexpr double kLevels[] = {-1.0, 0.5, 2.0};
  std::vector<double> v(u.rows());
  for (auto& x : v) x = kLevels[rng.next() % 3];
  const ComplexMatrix m = u * ComplexMatrix::diagonal(v) * u.adjoint();
  return (m + m.adjoint()) * Complex(0.5);
}

std::vector<LabeledOperator> random_family(std::size_t dim, std::size_t count, Rng& rng) {
  const ComplexMatrix u = random_unitary(dim, rng);
  std::vector<LabeledOperator> ops;
  for (std::size_t i = 0; i < count; ++i) ops.push_back({"O" + std::to_string(i), commuting_member(u, rng)});
  return ops;
}

}  // namespace

TEST_CASE("singlet with both z spins: perfectly anticorrelated two-atom support") {
  const std::vector<LabeledOperator> ops{{"Z1", tensor_product(pauli::z(), ComplexMatrix::identity(2))},
                                         {"Z2", tensor_product(ComplexMatrix::identity(2), pauli::z())}};
  const HVModel model = build_hv_model(presets::singlet(), ops);
  REQUIRE(model.atoms.size() == 4);
  // Lexicographic atom order: (-1,-1), (-1,1), (1,-1), (1,1).
  const double expected[] = {0.0, 0.5, 0.5, 0.0};
  for (std::size_t k = 0; k < 4; ++k) CHECK(model.weights[k] == doctest::Approx(expected[k]).epsilon(1e-12));
  CHECK(model.atoms[1].label() == "(-1;1)#0");
  const std::vector<std::string> both{"Z1", "Z2"};
  CHECK(hv_expectation(model, both) == doctest::Approx(-1.0));
  CHECK(hv_expectation(model, std::vector<std::string>{}) == doctest::Approx(1.0));

  const auto check = verify_model(model, presets::singlet(), ops);
  CHECK(check.max_error < 1e-12);
  CHECK(check.linearity_error < 1e-12);

  const std::string csv = to_csv(model);
  CHECK(csv.rfind("atom,weight,Z1,Z2\n", 0) == 0);
  CHECK(csv.find("(-1;1)#0,0.49999999999999") != std::string::npos);
}

TEST_CASE("random commuting families reproduce every product expectation") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const std::size_t dim = std::size_t{2} << (seed % 3);  // 2, 4, 8
    const DensityOperator rho = random_density(dim, rng);
    const auto ops = random_family(dim, 3, rng);
    const HVModel model = build_hv_model(rho, ops);
    const auto check = verify_model(model, rho, ops);
    CAPTURE(seed);
    CHECK(check.max_error < 1e-9);
    CHECK(check.linearity_error < 1e-9);
    CHECK(std::accumulate(model.weights.begin(), model.weights.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    for (const double w : model.weights) CHECK(w >= 0.0);
  }
}

TEST_CASE("characteristic functions agree with the quantum trace formula") {
  Rng rng(77);
  const DensityOperator rho = random_density(4, rng);
  const auto ops = random_family(4, 2, rng);
  const HVModel model = build_hv_model(rho, ops);
  for (const double xi : {-1.0, -0.3, 0.7, 2.0})
    for (const double eta : {-1.0, -0.3, 0.7, 2.0}) {
      const Complex q = quantum_characteristic(rho, ops[0].matrix, ops[1].matrix, xi, eta);
      const Complex h = hv_characteristic(model, "O0", "O1", xi, eta);
      CHECK(std::abs(q - h) < 1e-9);
    }
}

TEST_CASE("repeating one observable gives identical value columns and tiebreaks") {
  Rng rng(9);
  const DensityOperator rho = random_density(4, rng);
  const ComplexMatrix a = commuting_member(random_unitary(4, rng), rng);
  const std::vector<LabeledOperator> ops{{"A1", a}, {"A2", a}, {"A3", a}};
  const HVModel model = build_hv_model(rho, ops);
  for (std::size_t k = 0; k < model.atoms.size(); ++k) {
    CHECK(model.values[0][k] == doctest::Approx(model.values[1][k]).epsilon(1e-10));
    CHECK(model.values[0][k] == doctest::Approx(model.values[2][k]).epsilon(1e-10));
  }
  CHECK(verify_model(model, rho, ops).max_error < 1e-9);
  // Degenerate tuples are told apart by the tiebreak counter.
  bool saw_tiebreak = false;
  for (const auto& atom : model.atoms) saw_tiebreak = saw_tiebreak || atom.tiebreak > 0;
  const auto spectrum = joint_eigenbasis(std::vector<ComplexMatrix>{a}).values[0];
  bool degenerate = false;
  for (std::size_t k = 1; k < spectrum.size(); ++k) degenerate = degenerate || std::abs(spectrum[k] - spectrum[k - 1]) < 1e-7;
  CHECK(saw_tiebreak == degenerate);
}

TEST_CASE("joint eigenbasis is unitary and diagonalizes every member") {
  Rng rng(10);
  const auto ops = random_family(8, 4, rng);
  std::vector<ComplexMatrix> mats;
  for (const auto& op : ops) mats.push_back(op.matrix);
  const auto jb = joint_eigenbasis(mats);
  CHECK(is_unitary(jb.basis, 1e-10));
  for (std::size_t i = 0; i < mats.size(); ++i) {
    const ComplexMatrix d = jb.basis.adjoint() * mats[i] * jb.basis;
    CHECK(max_abs_diff(d, ComplexMatrix::diagonal(jb.values[i])) < 1e-9);
  }
}

TEST_CASE("construction errors") {
  const DensityOperator rho = presets::singlet();
  const ComplexMatrix x1 = tensor_product(pauli::x(), ComplexMatrix::identity(2));
  const ComplexMatrix z1 = tensor_product(pauli::z(), ComplexMatrix::identity(2));
  const ComplexMatrix z2 = tensor_product(ComplexMatrix::identity(2), pauli::z());
  try {
    build_hv_model(rho, std::vector<LabeledOperator>{{"Z2", z2}, {"X1", x1}, {"Z1", z1}});
    FAIL("expected CommutationError");
  } catch (const CommutationError& e) {
    CHECK(e.first() == 1);
    CHECK(e.second() == 2);
  }
  CHECK_THROWS_AS(build_hv_model(rho, std::vector<LabeledOperator>{{"Z", z1}, {"Z", z2}}), InvalidInput);
  CHECK_THROWS_AS(build_hv_model(rho, std::vector<LabeledOperator>{{"Z", pauli::z()}}), DimensionError);
  const HVModel model = build_hv_model(rho, std::vector<LabeledOperator>{{"Z1", z1}});
  CHECK_THROWS_AS(model.label_index("Q"), UnknownLabel);
}
