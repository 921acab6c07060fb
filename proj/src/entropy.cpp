#include "bellkit/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bellkit/eigen.hpp"
#include "bellkit/errors.hpp"

namespace bellkit {

namespace {

double log_in(double x, LogBase base) {
  const double l = std::log(x);
  return base == LogBase::E ? l : l / std::numbers::ln2;
}

double spectral_entropy(std::span<const double> p, LogBase base) {
  double s = 0.0;
  for (const double x : p)
    if (x > 0.0) s -= x * log_in(x, base);
  return s;
}

void require_kind(EntropyKind kind, bool quantum) {
  if (is_quantum(kind) != quantum)
    throw InvalidInput(std::string("entropy kind ") + to_string(kind) + " does not apply to " +
                       (quantum ? "a density operator" : "a classical distribution"));
}

Bipartition require_dims(const ClassicalDistribution& p) {
  if (!p.dims()) throw InvalidInput("classical distribution has no bipartite structure");
  return *p.dims();
}

}  // namespace

const char* to_string(LogBase b) { return b == LogBase::E ? "e" : "2"; }

const char* to_string(EntropyKind k) {
  switch (k) {
    case EntropyKind::Shannon: return "shannon";
    case EntropyKind::VonNeumann: return "von_neumann";
    case EntropyKind::LinearClassical: return "linear_classical";
    case EntropyKind::LinearQuantum: return "linear_quantum";
  }
  return "von_neumann";
}

bool is_quantum(EntropyKind k) { return k == EntropyKind::VonNeumann || k == EntropyKind::LinearQuantum; }

ClassicalDistribution::ClassicalDistribution(std::vector<double> weights, double tol) : weights_(std::move(weights)) {
  if (weights_.empty()) throw InvalidInput("classical distribution must be non-empty");
  double total = 0.0;
  for (const double w : weights_) {
    if (!(w >= 0.0)) throw InvalidInput("classical distribution has a negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > tol) throw InvalidInput("classical distribution sums to " + std::to_string(total));
}

ClassicalDistribution::ClassicalDistribution(std::vector<double> weights, Bipartition dims, double tol)
    : ClassicalDistribution(std::move(weights), tol) {
  if (dims.total() != weights_.size()) throw DimensionError("classical distribution size != M*N");
  dims_ = dims;
}

ClassicalDistribution ClassicalDistribution::marginal(Subsystem keep) const {
  const Bipartition d = require_dims(*this);
  std::vector<double> m(keep == Subsystem::First ? d.first : d.second, 0.0);
  for (std::size_t i = 0; i < d.first; ++i)
    for (std::size_t j = 0; j < d.second; ++j) m[keep == Subsystem::First ? i : j] += weights_[i * d.second + j];
  return ClassicalDistribution(std::move(m), 1e-10);
}

DensityOperator ClassicalDistribution::as_density() const { return DensityOperator(ComplexMatrix::diagonal(weights_)); }

double shannon_entropy(const ClassicalDistribution& p, LogBase base) { return spectral_entropy(p.weights(), base); }

double von_neumann_entropy(const DensityOperator& rho, LogBase base) {
  return spectral_entropy(hermitian_eigenvalues(rho.matrix()), base);
}

double linear_entropy_classical(const ClassicalDistribution& p) {
  double s = 0.0;
  for (const double w : p.weights()) s += w * w;
  return 1.0 - s;
}

double linear_entropy_quantum(const DensityOperator& rho) { return 1.0 - rho.purity(); }

double entropy(const DensityOperator& rho, EntropyKind kind, LogBase base) {
  require_kind(kind, true);
  return kind == EntropyKind::VonNeumann ? von_neumann_entropy(rho, base) : linear_entropy_quantum(rho);
}

double entropy(const ClassicalDistribution& p, EntropyKind kind, LogBase base) {
  require_kind(kind, false);
  return kind == EntropyKind::Shannon ? shannon_entropy(p, base) : linear_entropy_classical(p);
}

EntropyReport entropy_report(const DensityOperator& rho12, Bipartition dims, EntropyKind kind, LogBase base) {
  return {entropy(rho12, kind, base), entropy(partial_trace(rho12, dims, Subsystem::First), kind, base),
          entropy(partial_trace(rho12, dims, Subsystem::Second), kind, base), kind, base};
}

EntropyReport entropy_report(const ClassicalDistribution& p12, EntropyKind kind, LogBase base) {
  return {entropy(p12, kind, base), entropy(p12.marginal(Subsystem::First), kind, base),
          entropy(p12.marginal(Subsystem::Second), kind, base), kind, base};
}

double check_concavity(const DensityOperator& a, const DensityOperator& b, std::span<const double> grid,
                       EntropyKind kind, LogBase base) {
  if (a.dim() != b.dim()) throw DimensionError("check_concavity: dimension mismatch");
  const double sa = entropy(a, kind, base);
  const double sb = entropy(b, kind, base);
  double worst = std::numeric_limits<double>::infinity();
  for (const double l : grid) {
    const double smix = entropy(mix(a, b, l), kind, base);
    worst = std::min(worst, smix - l * sa - (1.0 - l) * sb);
  }
  return worst;
}

double check_concavity(const ClassicalDistribution& a, const ClassicalDistribution& b, std::span<const double> grid,
                       EntropyKind kind, LogBase base) {
  if (a.weights().size() != b.weights().size()) throw DimensionError("check_concavity: size mismatch");
  if (std::any_of(grid.begin(), grid.end(), [](double l) { return l < 0.0 || l > 1.0; }))
    throw InvalidInput("check_concavity: grid point outside [0, 1]");
  const double sa = entropy(a, kind, base);
  const double sb = entropy(b, kind, base);
  double worst = std::numeric_limits<double>::infinity();
  for (const double l : grid) {
    std::vector<double> w(a.weights().size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = l * a.weights()[i] + (1.0 - l) * b.weights()[i];
    const double smix = entropy(ClassicalDistribution(std::move(w), 1e-10), kind, base);
    worst = std::min(worst, smix - l * sa - (1.0 - l) * sb);
  }
  return worst;
}

double check_subadditivity(const DensityOperator& rho12, Bipartition dims, EntropyKind kind, LogBase base) {
  const auto r = entropy_report(rho12, dims, kind, base);
  return r.S1 + r.S2 - r.S12;
}

double check_subadditivity(const ClassicalDistribution& p12, EntropyKind kind, LogBase base) {
  const auto r = entropy_report(p12, kind, base);
  return r.S1 + r.S2 - r.S12;
}

double classical_monotonicity(const ClassicalDistribution& p12, EntropyKind kind, LogBase base) {
  const auto r = entropy_report(p12, kind, base);
  return r.S12 - std::max(r.S1, r.S2);
}

double quantum_monotonicity(const DensityOperator& rho12, Bipartition dims, EntropyKind kind, LogBase base) {
  const auto r = entropy_report(rho12, dims, kind, base);
  return r.S12 - std::max(r.S1, r.S2);
}

double araki_lieb(const DensityOperator& rho12, Bipartition dims, LogBase base) {
  const auto r = entropy_report(rho12, dims, EntropyKind::VonNeumann, base);
  return r.S12 - std::abs(r.S1 - r.S2);
}

double purity_combination(const DensityOperator& rho12, Bipartition dims) {
  const double M = static_cast<double>(dims.first);
  const double N = static_cast<double>(dims.second);
  const double p12 = rho12.purity();
  const double p1 = partial_trace(rho12, dims, Subsystem::First).purity();
  const double p2 = partial_trace(rho12, dims, Subsystem::Second).purity();
  return M * N * p12 - M * p1 - N * p2;
}

LinearEntropyVerdict linear_entropy_condition(const DensityOperator& rho12, Bipartition dims) {
  const double M = static_cast<double>(dims.first);
  const double N = static_cast<double>(dims.second);
  const auto r = entropy_report(rho12, dims, EntropyKind::LinearQuantum);
  LinearEntropyVerdict v;
  v.lhs = M * N * r.S12 + M * N - M - N;
  v.rhs = N * r.S1 + M * r.S2;
  v.holds = v.lhs >= v.rhs - tol::algebraic;
  v.purity_margin = -purity_combination(rho12, dims);
  v.beta_bound_implied = v.purity_margin >= -tol::algebraic;
  return v;
}

PurityBoundReport purity_bound_check(const BellScenario& s) {
  PurityBoundReport r;
  r.beta = beta(s);
  r.lhs = purity_combination(s.state(), s.dims());
  r.rhs = (r.beta * r.beta - 4.0) / 4.0;
  r.slack = r.lhs - r.rhs;
  r.traceless = std::abs(s.a().trace()) <= tol::validity && std::abs(s.b().trace()) <= tol::validity &&
                std::abs(s.c().trace()) <= tol::validity && std::abs(s.d().trace()) <= tol::validity;
  return r;
}

double purity_quadratic(const BellScenario& s, double lambda) {
  const Bipartition dims = s.dims();
  const double M = static_cast<double>(dims.first);
  const double N = static_cast<double>(dims.second);
  const ComplexMatrix& rho12 = s.state().matrix();
  const ComplexMatrix rho1 = partial_trace(rho12, dims, Subsystem::First);
  const ComplexMatrix rho2 = partial_trace(rho12, dims, Subsystem::Second);
  const ComplexMatrix i1 = ComplexMatrix::identity(dims.first);
  const ComplexMatrix i2 = ComplexMatrix::identity(dims.second);
  ComplexMatrix x = rho12;
  x -= tensor_product(rho1, i2) * Complex(1.0 / N);
  x -= tensor_product(i1, rho2) * Complex(1.0 / M);
  x += ComplexMatrix::identity(dims.total()) * Complex(1.0 / (M * N));
  x += bell_operator(s).matrix * Complex(lambda);
  return trace_of_product(x, x).real();
}

SubsystemCondition horodecki_check(const DensityOperator& rho12, Bipartition dims, EntropyKind kind, double tol) {
  SubsystemCondition c;
  c.entropies = entropy_report(rho12, dims, kind);
  c.condition_holds = c.entropies.S12 >= std::max(c.entropies.S1, c.entropies.S2) - tol;
  return c;
}

}  // namespace bellkit
