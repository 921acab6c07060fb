#include "bellkit/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bellkit/errors.hpp"

namespace bellkit {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kRelativeOffDiagonal = 1e-13;

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Zero a(p,q) with the unitary J = D R, where D = diag(1, conj(e)) makes the
// (p,q) entry real and R is the real Jacobi rotation for the resulting 2x2
// symmetric block. a <- J^dagger a J, v <- v J.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex e = apq / r;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * r);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex jpp = c;
  const Complex jpq = s;
  const Complex jqp = -s * std::conj(e);
  const Complex jqq = c * std::conj(e);

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * jpp + akq * jqp;
    a(k, q) = akp * jpq + akq * jqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * jpp + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * jqq;
  }
}

}  // namespace

EigenSystem hermitian_eigensystem(const ComplexMatrix& m, double hermitian_tol) {
  if (!m.is_square()) throw DimensionError("hermitian_eigensystem: matrix is not square");
  if (!is_hermitian(m, hermitian_tol)) throw InvalidInput("hermitian_eigensystem: matrix is not Hermitian");

  const std::size_t n = m.rows();
  ComplexMatrix a = (m + m.adjoint()) * Complex(0.5);
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double target = kRelativeOffDiagonal * a.frobenius_norm();
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= target) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenSystem out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double hermitian_tol) {
  return hermitian_eigensystem(m, hermitian_tol).values;
}

ComplexMatrix hermitian_function(const ComplexMatrix& m, const std::function<Complex(double)>& f) {
  const auto es = hermitian_eigensystem(m);
  const std::size_t n = m.rows();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex fk = f(es.values[k]);
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = es.vectors(i, k) * fk;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(es.vectors(j, k));
    }
  }
  return out;
}

}  // namespace bellkit
