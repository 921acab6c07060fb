#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "bellkit/matrix.hpp"
#include "bellkit/states.hpp"

namespace bellkit {

struct LabeledOperator {
  std::string label;
  ComplexMatrix matrix;
};

/// Orthonormal basis diagonalizing a commuting family at once.
struct JointEigenbasis {
  ComplexMatrix basis;                      // columns |lambda>
  std::vector<std::vector<double>> values;  // values[op][k] = <lambda_k|Op|lambda_k>
};

/// Diagonalize the first operator, then within each degenerate eigenspace
/// (eigenvalues closer than degeneracy_tol) diagonalize the restriction of the
/// next operator, and so on. Columns come out ordered lexicographically by the
/// tuple of eigenvalues. Throws CommutationError naming the offending pair.
JointEigenbasis joint_eigenbasis(std::span<const ComplexMatrix> ops, double commute_tol = tol::commute,
                                 double degeneracy_tol = tol::degeneracy);

/// One hidden-variable atom: the eigenvalue tuple plus an integer tiebreak
/// among atoms sharing that tuple.
struct Atom {
  std::vector<double> key;
  int tiebreak = 0;
  std::string label() const;
};

/// Finite hidden-variable model: atoms with weights rho(lambda) and a value
/// table A(lambda) per observable.
struct HVModel {
  std::vector<std::string> labels;
  std::vector<Atom> atoms;
  std::vector<double> weights;
  std::vector<std::vector<double>> values;  // values[label][atom]

  std::size_t label_index(const std::string& label) const;  // throws UnknownLabel
};

/// rho(lambda) = <lambda|rho|lambda>, A(lambda) = <lambda|A|lambda> in the
/// joint eigenbasis of ops.
HVModel build_hv_model(const DensityOperator& state, std::span<const LabeledOperator> ops,
                       double commute_tol = tol::commute);

/// sum_lambda rho(lambda) prod_{l in labels} A_l(lambda); 1 for no labels.
double hv_expectation(const HVModel& model, std::span<const std::string> labels);

struct ModelCheck {
  double max_error;        // worst |Tr(rho A B C) - HV| over label subsets of size <= 3
  double linearity_error;  // worst |<A+B> - sum rho (A + B)| over pairs
};

ModelCheck verify_model(const HVModel& model, const DensityOperator& state, std::span<const LabeledOperator> ops);

/// E[exp(i xi A + i eta B)] under the atom distribution.
Complex hv_characteristic(const HVModel& model, const std::string& a, const std::string& b, double xi, double eta);
/// Tr(rho exp(i xi A) exp(i eta B)).
Complex quantum_characteristic(const DensityOperator& state, const ComplexMatrix& a, const ComplexMatrix& b,
                               double xi, double eta);

/// One row per atom: atom,weight,<label>...; header first. Doubles at 17
/// significant digits.
std::string to_csv(const HVModel& model);

}  // namespace bellkit
