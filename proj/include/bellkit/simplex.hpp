#pragma once

#include <cstddef>
#include <vector>

namespace bellkit {

struct Phase1Result {
  bool feasible = false;
  double objective = 0.0;  // sum of artificial variables at the optimum
  std::vector<double> x;   // primal point (meaningful when feasible)
  int pivots = 0;
};

/// Decide whether { x >= 0 : A x = b } is nonempty with the phase-1 simplex
/// method (one artificial per row, Bland's smallest-index rule for both the
/// entering and leaving variable, so it always terminates). `a` is row-major
/// with rows x cols entries. Feasible iff the phase-1 optimum is <= threshold.
Phase1Result phase1_feasibility(std::size_t rows, std::size_t cols, const std::vector<double>& a,
                                const std::vector<double>& b, double threshold);

}  // namespace bellkit
