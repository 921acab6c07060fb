#pragma once

#include <array>
#include <cstddef>

#include "bellkit/tolerance.hpp"

namespace bellkit {

/// The eight measurable probabilities of a four-proposition scenario in which
/// only the pairs AB, BC, CD, AD are jointly measurable.
struct MarginalSet {
  double pA = 0, pB = 0, pC = 0, pD = 0;
  double pAB = 0, pAD = 0, pBC = 0, pCD = 0;

  /// Each value in [0,1] and every pair consistent with its singles
  /// (max(0, pX + pY - 1) <= pXY <= min(pX, pY)). Throws InconsistentMarginals.
  void validate(double tol = tol::validity) const;
};

/// Correlation <xy> of x = 2X - 1, y = 2Y - 1 from probabilities.
inline double correlation_from_probabilities(double pX, double pY, double pXY) {
  return 4.0 * pXY - 2.0 * pX - 2.0 * pY + 1.0;
}

/// Distribution over the 16 truth assignments of (A, B, C, D). Index bits:
/// A = 8, B = 4, C = 2, D = 1.
struct JointDistribution {
  std::array<double, 16> q{};

  static constexpr unsigned kA = 8, kB = 4, kC = 2, kD = 1;

  /// Probability that every proposition in mask is true.
  double marginal(unsigned mask) const;
  MarginalSet measurable() const;
  double total() const;
};

}  // namespace bellkit
