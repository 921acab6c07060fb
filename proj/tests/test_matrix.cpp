#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bellkit/eigen.hpp"
#include "bellkit/errors.hpp"
#include "bellkit/random.hpp"
#include "bellkit/states.hpp"
#include "oracles.hpp"

using namespace bellkit;

namespace {

ComplexMatrix reconstruct(const EigenSystem& es) {
  const ComplexMatrix d = ComplexMatrix::diagonal(es.values);
  return es.vectors * d * es.vectors.adjoint();
}

}  // namespace

TEST_CASE("matrix arithmetic basics") {
  const ComplexMatrix x = pauli::x(), y = pauli::y(), z = pauli::z();
  CHECK(max_abs_diff(x * y, Complex(0, 1) * z) < 1e-15);
  CHECK(max_abs_diff(commutator(x, y), Complex(0, 2) * z) < 1e-15);
  CHECK(commutator_norm(z, z) == 0.0);
  CHECK(is_hermitian(y));
  CHECK(is_unitary(x));
  CHECK_FALSE(is_projector(x));
  CHECK(is_projector((z + ComplexMatrix::identity(2)) * Complex(0.5)));
  CHECK(ComplexMatrix::identity(3).trace() == Complex(3.0));
  CHECK_THROWS_AS(ComplexMatrix(2, 3) * ComplexMatrix(2, 3), DimensionError);
  CHECK_THROWS_AS((ComplexMatrix{{1.0, 2.0}, {3.0}}), DimensionError);
}

TEST_CASE("trace of product is symmetric and matches the explicit product") {
  Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    const auto a = random_gaussian_matrix(5, 5, rng);
    const auto b = random_gaussian_matrix(5, 5, rng);
    CHECK(std::abs(trace_of_product(a, b) - trace_of_product(b, a)) < 1e-12);
    CHECK(std::abs(trace_of_product(a, b) - (a * b).trace()) < 1e-12);
  }
}

TEST_CASE("tensor product obeys the mixed-product law") {
  Rng rng(12);
  const auto a = random_gaussian_matrix(2, 2, rng), b = random_gaussian_matrix(3, 3, rng);
  const auto c = random_gaussian_matrix(2, 2, rng), d = random_gaussian_matrix(3, 3, rng);
  CHECK(max_abs_diff(tensor_product(a, b) * tensor_product(c, d), tensor_product(a * c, b * d)) < 1e-12);
  CHECK(std::abs(tensor_product(a, b).trace() - a.trace() * b.trace()) < 1e-12);
}

TEST_CASE("Jacobi eigensolver reconstructs and matches the reference spectrum") {
  for (const std::size_t n : {1u, 2u, 3u, 8u, 17u, 64u}) {
    Rng rng(100 + n);
    const ComplexMatrix h = random_hermitian(n, rng);
    const EigenSystem es = hermitian_eigensystem(h);
    CAPTURE(n);
    CHECK(is_unitary(es.vectors, 1e-10));
    CHECK(max_abs_diff(reconstruct(es), h) < 1e-10 * std::max(1.0, h.max_abs()));
    CHECK(std::is_sorted(es.values.begin(), es.values.end()));
    const auto ref = oracle::eigenvalues(h);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(es.values[i] - ref[i]) < 1e-10 * std::max(1.0, h.max_abs()));
  }
}

TEST_CASE("eigensolver handles exact degeneracy and diagonal input") {
  Rng rng(5);
  const ComplexMatrix u = random_unitary(6, rng);
  const std::vector<double> spectrum{-1, -1, 2, 2, 2, 5};
  const ComplexMatrix h = u * ComplexMatrix::diagonal(spectrum) * u.adjoint();
  const auto es = hermitian_eigensystem((h + h.adjoint()) * Complex(0.5));
  for (std::size_t i = 0; i < spectrum.size(); ++i) CHECK(std::abs(es.values[i] - spectrum[i]) < 1e-10);
  CHECK(max_abs_diff(reconstruct(es), h) < 1e-10);

  const auto d = hermitian_eigensystem(ComplexMatrix::diagonal(std::vector<double>{3, 1, 2}));
  CHECK(d.values == std::vector<double>{1, 2, 3});
}

TEST_CASE("eigensolver rejects non-Hermitian input") {
  CHECK_THROWS_AS(hermitian_eigensystem(ComplexMatrix{{1.0, 2.0}, {0.0, 1.0}}), InvalidInput);
  CHECK_THROWS_AS(hermitian_eigensystem(ComplexMatrix(2, 3)), DimensionError);
}

TEST_CASE("matrix functions through the spectrum") {
  const ComplexMatrix z = pauli::z();
  const double t = 0.37;
  const auto e = hermitian_function(z, [t](double w) { return std::exp(Complex(0, t * w)); });
  CHECK(std::abs(e(0, 0) - std::exp(Complex(0, t))) < 1e-14);
  CHECK(std::abs(e(1, 1) - std::exp(Complex(0, -t))) < 1e-14);
  CHECK(is_unitary(e, 1e-12));
}

TEST_CASE("density operator validation") {
  CHECK_NOTHROW(DensityOperator(ComplexMatrix::identity(3) * Complex(1.0 / 3.0)));
  CHECK_THROWS_AS(DensityOperator(ComplexMatrix::identity(2)), InvalidInput);                // trace 2
  CHECK_THROWS_AS(DensityOperator(ComplexMatrix{{1.5, 0.0}, {0.0, -0.5}}), InvalidInput);    // negative
  CHECK_THROWS_AS(DensityOperator(ComplexMatrix{{0.5, 1.0}, {0.0, 0.5}}), InvalidInput);     // not Hermitian
  CHECK_THROWS_AS(PureState({1.0, 1.0}), InvalidInput);
}

TEST_CASE("presets") {
  const auto s = presets::singlet();
  CHECK(std::abs(s.purity() - 1.0) < 1e-14);
  CHECK(std::abs(s.matrix()(1, 2) + 0.5) < 1e-15);
  CHECK(std::abs(presets::mixed().purity() - 0.25) < 1e-15);
  CHECK(std::abs(presets::product00().matrix()(0, 0) - 1.0) < 1e-15);
  const auto w = presets::werner(0.5);
  CHECK(std::abs(w.purity() - (0.25 + 0.75 * 0.25)) < 1e-14);  // (1 + 3 w^2) / 4
  CHECK_THROWS_AS(presets::werner(1.5), InvalidInput);
}

TEST_CASE("partial trace agrees with explicit index sums") {
  Rng rng(21);
  for (const auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 2}, {4, 4}}) {
    const auto rho = random_density(static_cast<std::size_t>(m * n), rng);
    const Bipartition dims{static_cast<std::size_t>(m), static_cast<std::size_t>(n)};
    const auto r1 = oracle::to_eigen(partial_trace(rho, dims, Subsystem::First).matrix());
    const auto r2 = oracle::to_eigen(partial_trace(rho, dims, Subsystem::Second).matrix());
    const auto full = oracle::to_eigen(rho.matrix());
    CHECK((r1 - oracle::reduce(full, m, n, true)).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((r2 - oracle::reduce(full, m, n, false)).cwiseAbs().maxCoeff() < 1e-14);
  }
  const auto prod = tensor_product(presets::product00(), presets::mixed());
  CHECK(max_abs_diff(partial_trace(prod, {4, 4}, Subsystem::Second).matrix(), presets::mixed().matrix()) < 1e-15);
}

TEST_CASE("random generators are valid and replayable") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto rho = random_density(4, seed);
    CHECK(rho.purity() <= 1.0 + 1e-12);
    CHECK(rho.purity() >= 0.25 - 1e-12);
    CHECK(max_abs_diff(rho.matrix(), random_density(4, seed).matrix()) == 0.0);

    const auto x = random_dichotomic(4, true, seed);
    CHECK(max_abs_diff(x * x, ComplexMatrix::identity(4)) < 1e-12);
    CHECK(std::abs(x.trace()) < 1e-12);
  }
  CHECK_THROWS_AS(random_dichotomic(3, true, 1), InvalidInput);
  CHECK(derive_seed(1, 2) != derive_seed(1, 3));
  CHECK(derive_seed(1, 2) == derive_seed(1, 2));

  Rng rng(3);
  const auto u = random_unitary(7, rng);
  CHECK(is_unitary(u, 1e-12));
  const auto n = random_direction(rng);
  CHECK(std::abs(n[0] * n[0] + n[1] * n[1] + n[2] * n[2] - 1.0) < 1e-14);
}
