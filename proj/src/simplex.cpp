#include "bellkit/simplex.hpp"

#include <cmath>

#include "bellkit/errors.hpp"

namespace bellkit {

namespace {
constexpr double kPivotEps = 1e-12;
constexpr int kMaxPivots = 10000;
}  // namespace

Phase1Result phase1_feasibility(std::size_t rows, std::size_t cols, const std::vector<double>& a,
                                const std::vector<double>& b, double threshold) {
  if (a.size() != rows * cols || b.size() != rows) throw DimensionError("phase1_feasibility: shape mismatch");

  const std::size_t width = cols + rows + 1;  // structural, artificial, rhs
  const std::size_t rhs = width - 1;
  std::vector<double> t(rows * width, 0.0);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return t[i * width + j]; };

  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const double sign = b[i] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < cols; ++j) at(i, j) = sign * a[i * cols + j];
    at(i, cols + i) = 1.0;
    at(i, rhs) = sign * b[i];
    basis[i] = cols + i;
  }

  // Reduced costs of the phase-1 objective (minimize the artificial sum).
  std::vector<double> cost(width, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) cost[j] -= at(i, j);
    cost[rhs] -= at(i, rhs);
  }

  Phase1Result result;
  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j)
      if (cost[j] < -kPivotEps) {
        enter = j;
        break;
      }
    if (enter == width) break;

    std::size_t leave = rows;
    double best_ratio = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
      const double coef = at(i, enter);
      if (coef <= kPivotEps) continue;
      const double ratio = at(i, rhs) / coef;
      if (leave == rows || ratio < best_ratio - 1e-15 ||
          (std::abs(ratio - best_ratio) <= 1e-15 && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    // The phase-1 objective is bounded below by 0, so an improving column
    // always has a positive entry.
    if (leave == rows) break;

    const double pivot = at(leave, enter);
    for (std::size_t j = 0; j < width; ++j) at(leave, j) /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave) continue;
      const double f = at(i, enter);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < width; ++j) at(i, j) -= f * at(leave, j);
    }
    const double f = cost[enter];
    for (std::size_t j = 0; j < width; ++j) cost[j] -= f * at(leave, j);
    basis[leave] = enter;

    if (++result.pivots > kMaxPivots) throw Error("phase1_feasibility: pivot limit exceeded");
  }

  result.objective = 0.0;
  for (std::size_t i = 0; i < rows; ++i)
    if (basis[i] >= cols) result.objective += std::max(0.0, at(i, rhs));
  result.feasible = result.objective <= threshold;
  result.x.assign(cols, 0.0);
  for (std::size_t i = 0; i < rows; ++i)
    if (basis[i] < cols) result.x[basis[i]] = std::max(0.0, at(i, rhs));
  return result;
}

}  // namespace bellkit
