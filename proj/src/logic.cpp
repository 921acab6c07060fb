#include "bellkit/logic.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "bellkit/errors.hpp"

namespace bellkit {

namespace {

void require_same_dim(const Proposition& a, const Proposition& b) {
  if (a.dim() != b.dim()) throw DimensionError("propositions " + a.label() + " and " + b.label() + " differ in dimension");
}

void require_commuting(const Proposition& a, const Proposition& b, double commute_tol) {
  require_same_dim(a, b);
  const double n = commutator_norm(a.projector(), b.projector());
  if (n >= commute_tol) throw CommutationError(n, 0, 1);
}

// Products of nearly commuting projectors are idempotent only up to the
// commutator size.
double derived_tol(double commute_tol) { return std::max(tol::validity, 10.0 * commute_tol); }

}  // namespace

Proposition::Proposition(std::string label, ComplexMatrix projector, double tol)
    : label_(std::move(label)) {
  if (!projector.is_square()) throw DimensionError("proposition " + label_ + ": projector is not square");
  if (!is_projector(projector, tol)) throw InvalidInput("proposition " + label_ + ": matrix is not a projector");
  projector_ = (projector + projector.adjoint()) * Complex(0.5);
}

Proposition Proposition::sure(std::size_t dim) { return Proposition("I", ComplexMatrix::identity(dim)); }

Proposition Proposition::absurd(std::size_t dim) { return Proposition("0", ComplexMatrix(dim, dim)); }

const char* to_string(TruthValue v) {
  switch (v) {
    case TruthValue::True: return "true";
    case TruthValue::False: return "false";
    case TruthValue::Undefined: return "undefined";
  }
  return "undefined";
}

TruthValue truth_value(const Proposition& p, const PureState& psi, double tol) {
  if (p.dim() != psi.dim()) throw DimensionError("truth_value: dimension mismatch");
  const auto projected = multiply(p.projector(), psi.amplitudes());
  if (vector_norm(projected) <= tol) return TruthValue::False;
  std::vector<Complex> residual(projected.size());
  for (std::size_t i = 0; i < residual.size(); ++i) residual[i] = projected[i] - psi.amplitudes()[i];
  if (vector_norm(residual) <= tol) return TruthValue::True;
  return TruthValue::Undefined;
}

bool commutes(const Proposition& a, const Proposition& b, double commute_tol) {
  require_same_dim(a, b);
  return commutator_norm(a.projector(), b.projector()) < commute_tol;
}

Proposition meet(const Proposition& a, const Proposition& b, double commute_tol) {
  require_commuting(a, b, commute_tol);
  const ComplexMatrix ab = a.projector() * b.projector();
  return Proposition("(" + a.label() + "^" + b.label() + ")", (ab + ab.adjoint()) * Complex(0.5),
                     derived_tol(commute_tol));
}

Proposition join(const Proposition& a, const Proposition& b, double commute_tol) {
  require_commuting(a, b, commute_tol);
  const ComplexMatrix ab = a.projector() * b.projector();
  const ComplexMatrix sym = (ab + ab.adjoint()) * Complex(0.5);
  return Proposition("(" + a.label() + "v" + b.label() + ")", a.projector() + b.projector() - sym,
                     derived_tol(commute_tol));
}

Proposition negate(const Proposition& a) {
  return Proposition(a.label() + "'", ComplexMatrix::identity(a.dim()) - a.projector());
}

double state_prob(const Proposition& p, const DensityOperator& state) {
  if (p.dim() != state.dim()) throw DimensionError("state_prob: dimension mismatch");
  return std::clamp(state.expectation(p.projector()), 0.0, 1.0);
}

DistanceReport distance(const Proposition& a, const Proposition& b, const DensityOperator& state,
                        double commute_tol) {
  const double p_meet = state_prob(meet(a, b, commute_tol), state);
  const double p_join = state_prob(join(a, b, commute_tol), state);
  return {p_join - p_meet, p_meet, p_join};
}

bool is_pseudometric_pair(const Proposition& a, const Proposition& b, const DensityOperator& state, double tol) {
  const double d = distance(a, b, state).d;
  return std::abs(d) <= tol && max_abs_diff(a.projector(), b.projector()) > tol::validity;
}

TriangleReport triangle_check(const Proposition& a, const Proposition& b, const Proposition& c,
                              const DensityOperator& state, double tol) {
  const double dab = distance(a, b, state).d;
  const double dac = distance(a, c, state).d;
  const double dbc = distance(b, c, state).d;
  const double lower = dbc - std::abs(dab - dac);
  const double upper = dab + dac - dbc;
  const double slack = std::min(lower, upper);
  return {slack >= -tol, slack};
}

QuadReport quad_check(const Proposition& a, const Proposition& b, const Proposition& c, const Proposition& d,
                      const DensityOperator& state, double tol) {
  const double dab = distance(a, b, state).d;
  const double dbc = distance(b, c, state).d;
  const double dcd = distance(c, d, state).d;
  const double dad = distance(a, d, state).d;
  const double total = dab + dbc + dcd + dad;

  struct Form {
    double lhs;
    std::string name;
  };
  const std::string A = a.label(), B = b.label(), C = c.label(), D = d.label();
  auto dist = [](const std::string& x, const std::string& y) { return "d(" + x + "," + y + ")"; };
  const std::array<Form, 4> forms{{
      {dad, dist(A, D) + "<=" + dist(A, B) + "+" + dist(B, C) + "+" + dist(C, D)},
      {dab, dist(A, B) + "<=" + dist(B, C) + "+" + dist(C, D) + "+" + dist(A, D)},
      {dbc, dist(B, C) + "<=" + dist(C, D) + "+" + dist(A, D) + "+" + dist(A, B)},
      {dcd, dist(C, D) + "<=" + dist(A, D) + "+" + dist(A, B) + "+" + dist(B, C)},
  }};

  QuadReport report{true, 0.0, ""};
  bool first = true;
  for (const auto& f : forms) {
    const double slack = (total - f.lhs) - f.lhs;
    if (first || slack < report.slack) {
      report.slack = slack;
      report.worst_permutation = f.name;
      first = false;
    }
  }
  report.holds = report.slack >= -tol;
  return report;
}

}  // namespace bellkit
