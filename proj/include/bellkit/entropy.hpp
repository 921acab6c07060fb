#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bellkit/bell.hpp"
#include "bellkit/states.hpp"

namespace bellkit {

enum class LogBase { E, Two };
enum class EntropyKind { Shannon, VonNeumann, LinearClassical, LinearQuantum };

const char* to_string(LogBase b);
const char* to_string(EntropyKind k);
bool is_quantum(EntropyKind k);

/// Finite probability vector, optionally indexed as (i, j) with dims (M, N),
/// row-major: weight(i, j) = weights[i * N + j].
class ClassicalDistribution {
 public:
  explicit ClassicalDistribution(std::vector<double> weights, double tol = 1e-12);
  ClassicalDistribution(std::vector<double> weights, Bipartition dims, double tol = 1e-12);

  const std::vector<double>& weights() const { return weights_; }
  std::optional<Bipartition> dims() const { return dims_; }
  ClassicalDistribution marginal(Subsystem keep) const;
  /// The diagonal density operator with these weights.
  DensityOperator as_density() const;

 private:
  std::vector<double> weights_;
  std::optional<Bipartition> dims_;
};

/// -sum p log p with 0 log 0 = 0.
double shannon_entropy(const ClassicalDistribution& p, LogBase base = LogBase::E);
/// -Tr(rho log rho) from the spectrum; eigenvalues below zero from roundoff
/// count as zero.
double von_neumann_entropy(const DensityOperator& rho, LogBase base = LogBase::E);
/// 1 - sum p^2
double linear_entropy_classical(const ClassicalDistribution& p);
/// 1 - Tr(rho^2)
double linear_entropy_quantum(const DensityOperator& rho);

/// Dispatch on kind. Quantum kinds need a density operator, classical kinds a
/// distribution; mismatches throw InvalidInput. Linear kinds ignore base.
double entropy(const DensityOperator& rho, EntropyKind kind, LogBase base = LogBase::E);
double entropy(const ClassicalDistribution& p, EntropyKind kind, LogBase base = LogBase::E);

struct EntropyReport {
  double S12 = 0, S1 = 0, S2 = 0;
  EntropyKind kind = EntropyKind::VonNeumann;
  LogBase base = LogBase::E;
};

EntropyReport entropy_report(const DensityOperator& rho12, Bipartition dims, EntropyKind kind,
                             LogBase base = LogBase::E);
EntropyReport entropy_report(const ClassicalDistribution& p12, EntropyKind kind, LogBase base = LogBase::E);

/// min over grid of S(l a + (1-l) b) - l S(a) - (1-l) S(b).
double check_concavity(const DensityOperator& a, const DensityOperator& b, std::span<const double> grid,
                       EntropyKind kind, LogBase base = LogBase::E);
double check_concavity(const ClassicalDistribution& a, const ClassicalDistribution& b, std::span<const double> grid,
                       EntropyKind kind, LogBase base = LogBase::E);

/// S1 + S2 - S12
double check_subadditivity(const DensityOperator& rho12, Bipartition dims, EntropyKind kind,
                           LogBase base = LogBase::E);
double check_subadditivity(const ClassicalDistribution& p12, EntropyKind kind, LogBase base = LogBase::E);

/// S12 - max(S1, S2) for a classical joint; never negative for Shannon.
double classical_monotonicity(const ClassicalDistribution& p12, EntropyKind kind = EntropyKind::Shannon,
                              LogBase base = LogBase::E);
/// The same quantity for a quantum state; negative for entangled pure states.
double quantum_monotonicity(const DensityOperator& rho12, Bipartition dims, EntropyKind kind = EntropyKind::VonNeumann,
                            LogBase base = LogBase::E);
/// S12 - |S1 - S2| with von Neumann entropies (Araki-Lieb).
double araki_lieb(const DensityOperator& rho12, Bipartition dims, LogBase base = LogBase::E);

/// Purity combination M N Tr(rho12^2) - M Tr(rho1^2) - N Tr(rho2^2), with rho1
/// the M-dimensional reduced state. It bounds (beta^2 - 4)/4 from above for
/// every traceless +-1 observable quadruple.
double purity_combination(const DensityOperator& rho12, Bipartition dims);

struct LinearEntropyVerdict {
  double lhs = 0;  // M N S(rho12) + M N - M - N
  double rhs = 0;  // N S(rho1) + M S(rho2)
  bool holds = false;
  double purity_margin = 0;  // -purity_combination; >= 0 forces |beta| <= 2
  bool beta_bound_implied = false;
};

/// Linear-entropy sufficient condition for the CHSH inequalities:
/// M N S(rho12) + M N - M - N >= N S(rho1) + M S(rho2) with S = 1 - Tr(rho^2).
LinearEntropyVerdict linear_entropy_condition(const DensityOperator& rho12, Bipartition dims);

struct PurityBoundReport {
  double lhs = 0;    // purity_combination
  double rhs = 0;    // (beta^2 - 4) / 4
  double slack = 0;  // lhs - rhs
  double beta = 0;
  bool traceless = false;  // the bound is guaranteed only for traceless observables
};

PurityBoundReport purity_bound_check(const BellScenario& s);

/// Tr[(rho12 - rho1 (x) I/N - I/M (x) rho2 + I/MN + lambda B)^2]; nonnegative
/// for every real lambda, and its discriminant yields the purity bound.
double purity_quadratic(const BellScenario& s, double lambda);

struct SubsystemCondition {
  bool condition_holds = false;
  EntropyReport entropies;
};

/// S(rho12) >= max(S(rho1), S(rho2)). With the linear (quadratic Renyi-type)
/// entropy the condition excludes CHSH violation for two qubits; the von
/// Neumann form does not (Werner states near w = 0.72 satisfy it and violate).
SubsystemCondition horodecki_check(const DensityOperator& rho12, Bipartition dims,
                                   EntropyKind kind = EntropyKind::LinearQuantum, double tol = tol::algebraic);

}  // namespace bellkit
