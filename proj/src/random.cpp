#include "bellkit/random.hpp"

#include <array>
#include <cmath>

#include "bellkit/errors.hpp"

namespace bellkit {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

ComplexMatrix random_gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  ComplexMatrix g(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) g(i, j) = rng.complex_normal();
  return g;
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  ComplexMatrix q = random_gaussian_matrix(dim, dim, rng);
  // Modified Gram-Schmidt on columns; R has a positive real diagonal, which
  // makes Q Haar distributed.
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      Complex proj = 0.0;
      for (std::size_t i = 0; i < dim; ++i) proj += std::conj(q(i, j)) * q(i, k);
      for (std::size_t i = 0; i < dim; ++i) q(i, k) -= proj * q(i, j);
    }
    double n = 0.0;
    for (std::size_t i = 0; i < dim; ++i) n += std::norm(q(i, k));
    n = std::sqrt(n);
    for (std::size_t i = 0; i < dim; ++i) q(i, k) /= n;
  }
  return q;
}

ComplexMatrix random_hermitian(std::size_t dim, Rng& rng) {
  const ComplexMatrix g = random_gaussian_matrix(dim, dim, rng);
  return (g + g.adjoint()) * Complex(0.5);
}

DensityOperator random_density(std::size_t dim, Rng& rng) {
  if (dim == 0) throw InvalidInput("random_density: dim must be >= 1");
  const ComplexMatrix g = random_gaussian_matrix(dim, dim, rng);
  ComplexMatrix gg = g * g.adjoint();
  const double tr = gg.trace().real();
  return DensityOperator(gg * Complex(1.0 / tr));
}

DensityOperator random_density(std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(dim, rng);
}

PureState random_pure_state(std::size_t dim, Rng& rng) {
  std::vector<Complex> v(dim);
  for (auto& z : v) z = rng.complex_normal();
  const double n = vector_norm(v);
  for (auto& z : v) z /= n;
  return PureState(std::move(v));
}

ComplexMatrix random_dichotomic(std::size_t dim, bool traceless, Rng& rng) {
  if (dim == 0) throw InvalidInput("random_dichotomic: dim must be >= 1");
  if (traceless && dim % 2 != 0) throw InvalidInput("random_dichotomic: traceless requires an even dimension");
  std::vector<double> signs(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (traceless)
      signs[i] = i < dim / 2 ? 1.0 : -1.0;
    else
      signs[i] = rng.uniform() < 0.5 ? 1.0 : -1.0;
  }
  const ComplexMatrix u = random_unitary(dim, rng);
  ComplexMatrix m = u * ComplexMatrix::diagonal(signs) * u.adjoint();
  return (m + m.adjoint()) * Complex(0.5);
}

ComplexMatrix random_dichotomic(std::size_t dim, bool traceless, std::uint64_t seed) {
  Rng rng(seed);
  return random_dichotomic(dim, traceless, rng);
}

std::array<double, 3> random_direction(Rng& rng) {
  std::array<double, 3> v{rng.normal(), rng.normal(), rng.normal()};
  const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  for (auto& x : v) x /= n;
  return v;
}

}  // namespace bellkit
