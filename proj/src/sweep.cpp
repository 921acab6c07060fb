#include "bellkit/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

#include "bellkit/bell.hpp"
#include "bellkit/eigen.hpp"
#include "bellkit/entropy.hpp"
#include "bellkit/errors.hpp"
#include "bellkit/feasibility.hpp"

namespace bellkit {

namespace {

struct KindName {
  SweepKind kind;
  const char* name;
};

constexpr std::array<KindName, 14> kKindNames{{
    {SweepKind::ConcavityVonNeumann, "concavity-von-neumann"},
    {SweepKind::ConcavityLinearQuantum, "concavity-linear-quantum"},
    {SweepKind::ConcavityShannon, "concavity-shannon"},
    {SweepKind::ConcavityLinearClassical, "concavity-linear-classical"},
    {SweepKind::SubadditivityVonNeumann, "subadditivity-von-neumann"},
    {SweepKind::SubadditivityLinearQuantum, "subadditivity-linear-quantum"},
    {SweepKind::SubadditivityShannon, "subadditivity-shannon"},
    {SweepKind::SubadditivityLinearClassical, "subadditivity-linear-classical"},
    {SweepKind::MonotonicityClassical, "monotonicity-classical"},
    {SweepKind::ArakiLieb, "araki-lieb"},
    {SweepKind::PurityBound, "purity-bound"},
    {SweepKind::Tsirelson, "tsirelson"},
    {SweepKind::BellTraces, "bell-traces"},
    {SweepKind::FineAgreement, "fine-agreement"},
}};

constexpr std::array<double, 11> kMixGrid{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

ClassicalDistribution random_classical(Bipartition dims, Rng& rng) {
  return ClassicalDistribution(random_probability_vector(dims.total(), rng), dims, 1e-10);
}

BellScenario random_scenario(Bipartition dims, Rng& rng) {
  DensityOperator state = random_test_state(dims.total(), rng);
  auto obs = [&](std::size_t dim) { return random_dichotomic(dim, true, rng); };
  ComplexMatrix a = obs(dims.first), c = obs(dims.first);
  ComplexMatrix b = obs(dims.second), d = obs(dims.second);
  return BellScenario(std::move(a), std::move(c), std::move(b), std::move(d), std::move(state));
}

double fine_agreement(Bipartition dims, Rng& rng) {
  MarginalSet m;
  if (rng.uniform() < 0.5) {
    JointDistribution q;
    const auto w = random_probability_vector(16, rng);
    std::copy(w.begin(), w.end(), q.q.begin());
    m = q.measurable();
  } else {
    DensityOperator state = random_test_state(dims.total(), rng);
    auto obs = [&](std::size_t dim) { return random_dichotomic(dim, dim % 2 == 0 && rng.uniform() < 0.8, rng); };
    ComplexMatrix a = obs(dims.first), c = obs(dims.first);
    ComplexMatrix b = obs(dims.second), d = obs(dims.second);
    m = marginals_from_scenario(BellScenario(std::move(a), std::move(c), std::move(b), std::move(d), std::move(state)));
  }
  const auto v = joint_feasible(m);
  if (v.feasible != v.fine_criterion) return -1.0;
  if (v.witness && (marginal_residual(*v.witness, m) > 1e-9 || chain_violation(*v.witness) > 1e-9)) return -1.0;
  return 0.0;
}

}  // namespace

const char* to_string(SweepKind k) {
  for (const auto& kn : kKindNames)
    if (kn.kind == k) return kn.name;
  return "unknown";
}

std::optional<SweepKind> parse_sweep_kind(std::string_view name) {
  for (const auto& kn : kKindNames)
    if (name == kn.name) return kn.kind;
  return std::nullopt;
}

std::vector<SweepKind> all_sweep_kinds() {
  std::vector<SweepKind> out;
  for (const auto& kn : kKindNames) out.push_back(kn.kind);
  return out;
}

DensityOperator random_test_state(std::size_t dim, Rng& rng) {
  const double pick = rng.uniform();
  if (pick < 1.0 / 3.0) return random_density(dim, rng);
  if (pick < 2.0 / 3.0) return random_pure_state(dim, rng).density();
  const double w = rng.uniform();
  const DensityOperator pure = random_pure_state(dim, rng).density();
  return mix(pure, random_density(dim, rng), w);
}

std::vector<double> random_probability_vector(std::size_t n, Rng& rng) {
  std::vector<double> w(n);
  double total = 0.0;
  for (auto& x : w) {
    const double u = rng.uniform();
    const double e = -std::log(1.0 - rng.uniform());
    x = u < 0.2 ? 0.0 : e;
    total += x;
  }
  if (total == 0.0) {
    w[static_cast<std::size_t>(rng.uniform() * static_cast<double>(n)) % n] = 1.0;
    return w;
  }
  for (auto& x : w) x /= total;
  return w;
}

double sweep_sample(SweepKind kind, Bipartition dims, std::uint64_t sample_seed) {
  Rng rng(sample_seed);
  const std::size_t dim = dims.total();
  switch (kind) {
    case SweepKind::ConcavityVonNeumann:
    case SweepKind::ConcavityLinearQuantum: {
      const auto a = random_test_state(dim, rng);
      const auto b = random_test_state(dim, rng);
      const auto k = kind == SweepKind::ConcavityVonNeumann ? EntropyKind::VonNeumann : EntropyKind::LinearQuantum;
      return check_concavity(a, b, kMixGrid, k);
    }
    case SweepKind::ConcavityShannon:
    case SweepKind::ConcavityLinearClassical: {
      const auto a = random_classical(dims, rng);
      const auto b = random_classical(dims, rng);
      const auto k = kind == SweepKind::ConcavityShannon ? EntropyKind::Shannon : EntropyKind::LinearClassical;
      return check_concavity(a, b, kMixGrid, k);
    }
    case SweepKind::SubadditivityVonNeumann:
      return check_subadditivity(random_test_state(dim, rng), dims, EntropyKind::VonNeumann);
    case SweepKind::SubadditivityLinearQuantum:
      return check_subadditivity(random_test_state(dim, rng), dims, EntropyKind::LinearQuantum);
    case SweepKind::SubadditivityShannon:
      return check_subadditivity(random_classical(dims, rng), EntropyKind::Shannon);
    case SweepKind::SubadditivityLinearClassical:
      return check_subadditivity(random_classical(dims, rng), EntropyKind::LinearClassical);
    case SweepKind::MonotonicityClassical:
      return classical_monotonicity(random_classical(dims, rng));
    case SweepKind::ArakiLieb:
      return araki_lieb(random_test_state(dim, rng), dims);
    case SweepKind::PurityBound:
      return purity_bound_check(random_scenario(dims, rng)).slack;
    case SweepKind::Tsirelson: {
      const auto w = hermitian_eigenvalues(bell_operator(random_scenario(dims, rng)).matrix);
      return 2.0 * std::numbers::sqrt2 - std::max(std::abs(w.front()), std::abs(w.back()));
    }
    case SweepKind::BellTraces: {
      const auto s = random_scenario(dims, rng);
      const auto b = bell_operator(s).matrix;
      const double tr = std::abs(b.trace());
      const double tr2 = std::abs(trace_of_product(b, b).real() - 4.0 * static_cast<double>(dim));
      return -std::max(tr, tr2);
    }
    case SweepKind::FineAgreement:
      return fine_agreement(dims, rng);
  }
  throw InvalidInput("unknown sweep kind");
}

SweepSummary run_sweep(const SweepParams& params, Execution exec) {
  const auto slacks = evaluate_samples(
      params.count, params.seed, [&](std::uint64_t s) { return sweep_sample(params.kind, params.dims, s); }, exec);
  SweepSummary summary{params.kind, params.count, std::numeric_limits<double>::infinity(), 0, {}};
  summary.samples.reserve(params.count);
  for (std::size_t i = 0; i < slacks.size(); ++i) {
    const std::uint64_t s = derive_seed(params.seed, i);
    summary.samples.push_back({s, slacks[i]});
    if (slacks[i] < summary.min_slack) {
      summary.min_slack = slacks[i];
      summary.argmin_seed = s;
    }
  }
  return summary;
}

std::string to_csv(const SweepSummary& summary) {
  std::ostringstream os;
  os << "seed,kind,slack\n";
  for (const auto& s : summary.samples) os << s.seed << "," << to_string(summary.kind) << "," << format_double(s.slack) << "\n";
  return os.str();
}

}  // namespace bellkit
