#pragma once

#include <cstddef>
#include <vector>

#include "bellkit/matrix.hpp"

namespace bellkit {

/// Trace-one positive Hermitian matrix. Validated on construction.
class DensityOperator {
 public:
  /// Throws InvalidInput unless m is Hermitian, has spectrum >= -tol and
  /// trace 1 within tol.
  explicit DensityOperator(ComplexMatrix m, double tol = tol::validity);

  static DensityOperator maximally_mixed(std::size_t dim);

  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return matrix_.rows(); }

  /// Tr(rho^2)
  double purity() const;
  /// Re Tr(rho * op)
  double expectation(const ComplexMatrix& op) const;

 private:
  ComplexMatrix matrix_;
};

/// Unit vector in C^dim.
class PureState {
 public:
  explicit PureState(std::vector<Complex> amplitudes, double tol = tol::validity);

  static PureState basis(std::size_t dim, std::size_t index);

  const std::vector<Complex>& amplitudes() const { return amplitudes_; }
  std::size_t dim() const { return amplitudes_.size(); }
  DensityOperator density() const;

 private:
  std::vector<Complex> amplitudes_;
};

enum class Subsystem { First, Second };

/// Local dimensions (M, N) of a bipartite space of dimension M*N.
struct Bipartition {
  std::size_t first;
  std::size_t second;
  std::size_t total() const { return first * second; }
};

ComplexMatrix partial_trace(const ComplexMatrix& m, Bipartition dims, Subsystem keep);
DensityOperator partial_trace(const DensityOperator& rho12, Bipartition dims, Subsystem keep);

DensityOperator tensor_product(const DensityOperator& a, const DensityOperator& b);
/// weight * a + (1 - weight) * b
DensityOperator mix(const DensityOperator& a, const DensityOperator& b, double weight);

namespace presets {
/// (|01> - |10>) / sqrt(2)
PureState singlet_vector();
DensityOperator singlet();
DensityOperator product00();
/// I/4 on two qubits.
DensityOperator mixed();
/// w * singlet + (1 - w) * I/4, w in [-1/3, 1].
DensityOperator werner(double w);
}  // namespace presets

}  // namespace bellkit
