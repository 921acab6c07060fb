#pragma once

#include <array>
#include <optional>

#include "bellkit/bell.hpp"
#include "bellkit/hidden_variables.hpp"
#include "bellkit/marginals.hpp"

namespace bellkit {

struct FineReport {
  bool satisfied = false;
  /// CHSH values of the original labelling and of the swaps A<->C, B<->D and
  /// both, in that order. Each swap moves the minus sign to a different edge
  /// of the A-B-C-D cycle.
  std::array<double, 4> chsh_values{};
};

struct FeasibilityVerdict {
  bool feasible = false;
  std::optional<JointDistribution> witness;
  bool fine_criterion = false;
  std::array<double, 4> chsh_values{};
  double phase1_objective = 0.0;
};

/// Four-inequality criterion: all |CHSH| <= 2 + tol (closed inequality).
FineReport fine_criterion(const MarginalSet& m, double tol = tol::validity);

/// Existence of a 16-atom joint distribution over (A, B, C, D) reproducing the
/// eight marginals: 16 nonnegative unknowns, normalization plus eight equality
/// rows, decided by phase-1 simplex with threshold tol::lp_feasible.
/// Throws InconsistentMarginals when m fails its own validation.
FeasibilityVerdict joint_feasible(const MarginalSet& m);

/// Largest violation of the ordering chains 0 <= p_ABCD <= p_ABC <= p_AB <=
/// p_A <= 1 over every labelling (0 when all chains hold).
double chain_violation(const JointDistribution& q);

/// Worst |witness marginal - input| over the eight measured quantities.
double marginal_residual(const JointDistribution& q, const MarginalSet& m);

enum class Observable { A, B, C, D };

/// Tr(rho P_X) and Tr(rho P_X P_Y) with P = (x + I)/2. Pairs within one side
/// (A with C, B with D) are not jointly measurable and throw CommutationError.
double single_probability(const BellScenario& s, Observable x);
double pair_probability(const BellScenario& s, Observable x, Observable y);

MarginalSet marginals_from_scenario(const BellScenario& s);

struct ContextModel {
  HVModel model;
  ModelCheck check;
};

struct ContextualityReport {
  ContextModel context_ab;  // {A, B} measured together
  ContextModel context_ad;  // {A, D} measured together
  MarginalSet marginals;
  FeasibilityVerdict verdict;
  /// Each context has a valid model while no single joint distribution exists.
  bool contextual = false;
};

/// Builds a hidden-variable model per jointly measurable context and checks
/// whether one joint distribution could serve all of them.
ContextualityReport contextuality_demo(const BellScenario& s);

}  // namespace bellkit
