#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "bellkit/matrix.hpp"
#include "bellkit/states.hpp"

namespace bellkit {

/// Seedable generator (mt19937_64). Every stochastic routine either takes a
/// seed or an Rng reference, so runs replay exactly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }  // [0, 1)
  Complex complex_normal() { return {normal(), normal()}; }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// splitmix64 of (base, index): decorrelated per-sample seeds for sweeps.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

ComplexMatrix random_gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng);
/// Haar unitary via Gram-Schmidt on a complex Gaussian matrix.
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);
ComplexMatrix random_hermitian(std::size_t dim, Rng& rng);

/// G G^dagger / Tr(G G^dagger) with G a square complex Gaussian matrix.
DensityOperator random_density(std::size_t dim, Rng& rng);
DensityOperator random_density(std::size_t dim, std::uint64_t seed);

PureState random_pure_state(std::size_t dim, Rng& rng);

/// U diag(+-1) U^dagger. With traceless set the spectrum is balanced and dim
/// must be even; otherwise each sign is drawn independently.
ComplexMatrix random_dichotomic(std::size_t dim, bool traceless, Rng& rng);
ComplexMatrix random_dichotomic(std::size_t dim, bool traceless, std::uint64_t seed);

/// Uniform point on the unit sphere.
std::array<double, 3> random_direction(Rng& rng);

}  // namespace bellkit
