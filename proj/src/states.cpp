#include "bellkit/states.hpp"

#include <cmath>
#include <string>

#include "bellkit/eigen.hpp"
#include "bellkit/errors.hpp"

namespace bellkit {

DensityOperator::DensityOperator(ComplexMatrix m, double tol) {
  if (!m.is_square() || m.rows() == 0) throw DimensionError("density operator must be a non-empty square matrix");
  if (!is_hermitian(m, tol)) throw InvalidInput("density operator is not Hermitian");
  const Complex tr = m.trace();
  if (std::abs(tr - Complex(1.0)) > tol) {
    throw InvalidInput("density operator trace is " + std::to_string(tr.real()) + ", expected 1");
  }
  const auto w = hermitian_eigenvalues(m, tol);
  if (w.front() < -tol) {
    throw InvalidInput("density operator has negative eigenvalue " + std::to_string(w.front()));
  }
  matrix_ = (m + m.adjoint()) * Complex(0.5);
}

DensityOperator DensityOperator::maximally_mixed(std::size_t dim) {
  return DensityOperator(ComplexMatrix::identity(dim) * Complex(1.0 / static_cast<double>(dim)));
}

double DensityOperator::purity() const { return trace_of_product(matrix_, matrix_).real(); }

double DensityOperator::expectation(const ComplexMatrix& op) const {
  if (op.rows() != dim() || op.cols() != dim()) throw DimensionError("expectation: operator dimension mismatch");
  return trace_of_product(matrix_, op).real();
}

PureState::PureState(std::vector<Complex> amplitudes, double tol) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty()) throw DimensionError("pure state must have at least one amplitude");
  const double n = vector_norm(amplitudes_);
  if (std::abs(n * n - 1.0) > tol) throw InvalidInput("pure state is not normalized (|psi|^2 = " + std::to_string(n * n) + ")");
}

PureState PureState::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DimensionError("basis index out of range");
  std::vector<Complex> v(dim);
  v[index] = 1.0;
  return PureState(std::move(v));
}

DensityOperator PureState::density() const { return DensityOperator(ComplexMatrix::outer(amplitudes_)); }

ComplexMatrix partial_trace(const ComplexMatrix& m, Bipartition dims, Subsystem keep) {
  if (!m.is_square() || m.rows() != dims.total() || dims.first == 0 || dims.second == 0) {
    throw DimensionError("partial_trace: matrix dimension " + std::to_string(m.rows()) + " != " +
                         std::to_string(dims.first) + "x" + std::to_string(dims.second));
  }
  const std::size_t M = dims.first;
  const std::size_t N = dims.second;
  if (keep == Subsystem::First) {
    ComplexMatrix out(M, M);
    for (std::size_t i = 0; i < M; ++i)
      for (std::size_t j = 0; j < M; ++j)
        for (std::size_t k = 0; k < N; ++k) out(i, j) += m(i * N + k, j * N + k);
    return out;
  }
  ComplexMatrix out(N, N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < M; ++k) out(i, j) += m(k * N + i, k * N + j);
  return out;
}

DensityOperator partial_trace(const DensityOperator& rho12, Bipartition dims, Subsystem keep) {
  return DensityOperator(partial_trace(rho12.matrix(), dims, keep));
}

DensityOperator tensor_product(const DensityOperator& a, const DensityOperator& b) {
  return DensityOperator(tensor_product(a.matrix(), b.matrix()));
}

DensityOperator mix(const DensityOperator& a, const DensityOperator& b, double weight) {
  if (a.dim() != b.dim()) throw DimensionError("mix: dimension mismatch");
  if (weight < 0.0 || weight > 1.0) throw InvalidInput("mix: weight outside [0, 1]");
  return DensityOperator(a.matrix() * Complex(weight) + b.matrix() * Complex(1.0 - weight));
}

namespace presets {

PureState singlet_vector() {
  const double h = 1.0 / std::sqrt(2.0);
  return PureState({0.0, h, -h, 0.0});
}

DensityOperator singlet() { return singlet_vector().density(); }

DensityOperator product00() { return PureState::basis(4, 0).density(); }

DensityOperator mixed() { return DensityOperator::maximally_mixed(4); }

DensityOperator werner(double w) {
  if (w < -1.0 / 3.0 - 1e-12 || w > 1.0 + 1e-12) throw InvalidInput("werner weight must lie in [-1/3, 1]");
  return DensityOperator(singlet().matrix() * Complex(w) + ComplexMatrix::identity(4) * Complex((1.0 - w) / 4.0));
}

}  // namespace presets

}  // namespace bellkit
