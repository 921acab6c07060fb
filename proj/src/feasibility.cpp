#include "bellkit/feasibility.hpp"

#include <algorithm>
#include <cmath>

#include "bellkit/errors.hpp"
#include "bellkit/simplex.hpp"

namespace bellkit {

namespace {

struct Row {
  unsigned mask;
  double value;
};

bool on_side_one(Observable x) { return x == Observable::A || x == Observable::C; }

const ComplexMatrix& observable(const BellScenario& s, Observable x) {
  switch (x) {
    case Observable::A: return s.a();
    case Observable::B: return s.b();
    case Observable::C: return s.c();
    case Observable::D: return s.d();
  }
  return s.a();
}

// Projector (x + I)/2 lifted to the joint space.
ComplexMatrix lifted_projector(const BellScenario& s, Observable x) {
  const auto dims = s.dims();
  const ComplexMatrix& obs = observable(s, x);
  const ComplexMatrix p = (obs + ComplexMatrix::identity(obs.rows())) * Complex(0.5);
  return on_side_one(x) ? tensor_product(p, ComplexMatrix::identity(dims.second))
                        : tensor_product(ComplexMatrix::identity(dims.first), p);
}

ContextModel context_model(const BellScenario& s, Observable x, const char* xl, Observable y, const char* yl) {
  const std::vector<LabeledOperator> ops{{xl, lifted_projector(s, x)}, {yl, lifted_projector(s, y)}};
  ContextModel c{build_hv_model(s.state(), ops), {}};
  c.check = verify_model(c.model, s.state(), ops);
  return c;
}

}  // namespace

FineReport fine_criterion(const MarginalSet& m, double tol) {
  const double ab = correlation_from_probabilities(m.pA, m.pB, m.pAB);
  const double bc = correlation_from_probabilities(m.pB, m.pC, m.pBC);
  const double cd = correlation_from_probabilities(m.pC, m.pD, m.pCD);
  const double ad = correlation_from_probabilities(m.pA, m.pD, m.pAD);
  FineReport r;
  r.chsh_values = {ab + bc + cd - ad, bc + ab + ad - cd, ad + cd + bc - ab, cd + ad + ab - bc};
  r.satisfied = std::all_of(r.chsh_values.begin(), r.chsh_values.end(),
                            [tol](double v) { return std::abs(v) <= 2.0 + tol; });
  return r;
}

FeasibilityVerdict joint_feasible(const MarginalSet& m) {
  m.validate();
  using J = JointDistribution;
  const std::array<Row, 9> rows{{{0u, 1.0},
                                 {J::kA, m.pA},
                                 {J::kB, m.pB},
                                 {J::kC, m.pC},
                                 {J::kD, m.pD},
                                 {J::kA | J::kB, m.pAB},
                                 {J::kA | J::kD, m.pAD},
                                 {J::kB | J::kC, m.pBC},
                                 {J::kC | J::kD, m.pCD}}};
  std::vector<double> a(rows.size() * 16, 0.0);
  std::vector<double> b(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (unsigned atom = 0; atom < 16; ++atom)
      if ((atom & rows[i].mask) == rows[i].mask) a[i * 16 + atom] = 1.0;
    b[i] = rows[i].value;
  }

  const Phase1Result lp = phase1_feasibility(rows.size(), 16, a, b, tol::lp_feasible);
  const FineReport fine = fine_criterion(m);

  FeasibilityVerdict v;
  v.feasible = lp.feasible;
  v.phase1_objective = lp.objective;
  v.fine_criterion = fine.satisfied;
  v.chsh_values = fine.chsh_values;
  if (lp.feasible) {
    JointDistribution q;
    std::copy(lp.x.begin(), lp.x.end(), q.q.begin());
    v.witness = q;
  }
  return v;
}

double chain_violation(const JointDistribution& q) {
  std::array<unsigned, 4> order{JointDistribution::kA, JointDistribution::kB, JointDistribution::kC,
                                JointDistribution::kD};
  std::sort(order.begin(), order.end());
  double worst = 0.0;
  do {
    double prev = 1.0;
    unsigned mask = 0;
    for (const unsigned bit : order) {
      mask |= bit;
      const double p = q.marginal(mask);
      worst = std::max(worst, p - prev);
      prev = p;
    }
    worst = std::max(worst, -prev);
  } while (std::next_permutation(order.begin(), order.end()));
  return worst;
}

double marginal_residual(const JointDistribution& q, const MarginalSet& m) {
  const MarginalSet r = q.measurable();
  double worst = std::abs(q.total() - 1.0);
  for (const auto& [x, y] : {std::pair{r.pA, m.pA}, {r.pB, m.pB}, {r.pC, m.pC}, {r.pD, m.pD}, {r.pAB, m.pAB},
                             {r.pAD, m.pAD}, {r.pBC, m.pBC}, {r.pCD, m.pCD}})
    worst = std::max(worst, std::abs(x - y));
  return worst;
}

double single_probability(const BellScenario& s, Observable x) {
  return std::clamp(s.state().expectation(lifted_projector(s, x)), 0.0, 1.0);
}

double pair_probability(const BellScenario& s, Observable x, Observable y) {
  if (on_side_one(x) == on_side_one(y)) {
    const double n = commutator_norm(observable(s, x), observable(s, y));
    throw CommutationError(n, static_cast<std::size_t>(x), static_cast<std::size_t>(y));
  }
  return std::clamp(s.state().expectation(lifted_projector(s, x) * lifted_projector(s, y)), 0.0, 1.0);
}

MarginalSet marginals_from_scenario(const BellScenario& s) {
  using O = Observable;
  MarginalSet m;
  m.pA = single_probability(s, O::A);
  m.pB = single_probability(s, O::B);
  m.pC = single_probability(s, O::C);
  m.pD = single_probability(s, O::D);
  m.pAB = pair_probability(s, O::A, O::B);
  m.pAD = pair_probability(s, O::A, O::D);
  m.pBC = pair_probability(s, O::B, O::C);
  m.pCD = pair_probability(s, O::C, O::D);
  return m;
}

ContextualityReport contextuality_demo(const BellScenario& s) {
  ContextualityReport r{context_model(s, Observable::A, "A", Observable::B, "B"),
                        context_model(s, Observable::A, "A", Observable::D, "D"), marginals_from_scenario(s), {},
                        false};
  r.verdict = joint_feasible(r.marginals);
  const bool models_valid = std::max(r.context_ab.check.max_error, r.context_ad.check.max_error) < tol::validity;
  r.contextual = models_valid && !r.verdict.feasible;
  return r;
}

}  // namespace bellkit
