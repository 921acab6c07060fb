#pragma once

#include <functional>
#include <vector>

#include "bellkit/matrix.hpp"

namespace bellkit {

struct EigenSystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // orthonormal columns, vectors(:, k) pairs with values[k]
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix. Converged when the
/// off-diagonal Frobenius mass drops below 1e-13 * ||m||_F.
/// Throws InvalidInput if m is not Hermitian within hermitian_tol.
EigenSystem hermitian_eigensystem(const ComplexMatrix& m, double hermitian_tol = tol::validity);

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double hermitian_tol = tol::validity);

/// V f(diag(w)) V^dagger for Hermitian m = V diag(w) V^dagger.
ComplexMatrix hermitian_function(const ComplexMatrix& m, const std::function<Complex(double)>& f);

}  // namespace bellkit
