#pragma once

#include <string>

#include "bellkit/matrix.hpp"
#include "bellkit/states.hpp"

namespace bellkit {

/// A yes/no observable: a labelled projector.
class Proposition {
 public:
  /// Throws InvalidInput unless projector is Hermitian and idempotent within tol.
  Proposition(std::string label, ComplexMatrix projector, double tol = tol::validity);

  /// The sure proposition I.
  static Proposition sure(std::size_t dim);
  /// The absurd proposition (zero projector).
  static Proposition absurd(std::size_t dim);

  const std::string& label() const { return label_; }
  const ComplexMatrix& projector() const { return projector_; }
  std::size_t dim() const { return projector_.rows(); }

 private:
  std::string label_;
  ComplexMatrix projector_;
};

enum class TruthValue { True, False, Undefined };

const char* to_string(TruthValue v);

/// True iff P|psi> = |psi>, False iff P|psi> = 0, Undefined otherwise.
TruthValue truth_value(const Proposition& p, const PureState& psi, double tol = tol::validity);

// Lattice operations, supported for commuting pairs only. A pair counts as
// commuting when ||[A,B]||_F < commute_tol; otherwise CommutationError.
Proposition meet(const Proposition& a, const Proposition& b, double commute_tol = tol::commute);
Proposition join(const Proposition& a, const Proposition& b, double commute_tol = tol::commute);
Proposition negate(const Proposition& a);

bool commutes(const Proposition& a, const Proposition& b, double commute_tol = tol::commute);

/// Tr(rho P) clamped to [0, 1].
double state_prob(const Proposition& p, const DensityOperator& state);

struct DistanceReport {
  double d;       // p_join - p_meet
  double p_meet;
  double p_join;
};

/// d(A,B) = p(A join B) - p(A meet B) for commuting A, B.
DistanceReport distance(const Proposition& a, const Proposition& b, const DensityOperator& state,
                        double commute_tol = tol::commute);

/// d(A,B) == 0 while A != B: the pseudometric case.
bool is_pseudometric_pair(const Proposition& a, const Proposition& b, const DensityOperator& state,
                          double tol = tol::algebraic);

// Slack convention shared by every inequality checker: positive means the
// inequality holds with that margin, negative means it is violated.
struct TriangleReport {
  bool holds;
  double slack;
};

/// |d(A,B) - d(A,C)| <= d(B,C) <= d(A,B) + d(A,C). All three pairs must commute.
TriangleReport triangle_check(const Proposition& a, const Proposition& b, const Proposition& c,
                              const DensityOperator& state, double tol = tol::algebraic);

struct QuadReport {
  bool holds;
  double slack;
  std::string worst_permutation;
};

/// d(A,D) <= d(A,B) + d(B,C) + d(C,D) together with the three cyclic
/// relabellings, each putting a different edge of the cycle A-B-C-D-A on the
/// left. Only the four edge pairs need to commute.
QuadReport quad_check(const Proposition& a, const Proposition& b, const Proposition& c, const Proposition& d,
                      const DensityOperator& state, double tol = tol::algebraic);

}  // namespace bellkit
