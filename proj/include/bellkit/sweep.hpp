#pragma once

#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bellkit/random.hpp"
#include "bellkit/states.hpp"

namespace bellkit {

enum class Execution { Serial, Parallel };

/// Evaluate kernel(derive_seed(base_seed, i)) for i in [0, count). Samples are
/// independent, so the serial loop and the OpenMP loop give identical output;
/// the serial path is the reference the parallel one is tested against.
template <class Kernel>
auto evaluate_samples(std::size_t count, std::uint64_t base_seed, Kernel&& kernel, Execution exec)
    -> std::vector<decltype(kernel(std::uint64_t{}))> {
  using Result = decltype(kernel(std::uint64_t{}));
  std::vector<Result> out(count);
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < count; ++i) out[i] = kernel(derive_seed(base_seed, i));
    return out;
  }
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < static_cast<long long>(count); ++i) {
    try {
      out[static_cast<std::size_t>(i)] = kernel(derive_seed(base_seed, static_cast<std::uint64_t>(i)));
    } catch (...) {
#pragma omp critical(bellkit_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

enum class SweepKind {
  ConcavityVonNeumann,
  ConcavityLinearQuantum,
  ConcavityShannon,
  ConcavityLinearClassical,
  SubadditivityVonNeumann,
  SubadditivityLinearQuantum,
  SubadditivityShannon,
  SubadditivityLinearClassical,
  MonotonicityClassical,
  ArakiLieb,
  PurityBound,
  Tsirelson,
  BellTraces,
  FineAgreement,
};

const char* to_string(SweepKind k);
std::optional<SweepKind> parse_sweep_kind(std::string_view name);
std::vector<SweepKind> all_sweep_kinds();

struct SweepParams {
  SweepKind kind = SweepKind::ConcavityVonNeumann;
  std::size_t count = 1000;
  std::uint64_t seed = 0;
  Bipartition dims{2, 2};
};

struct SweepSample {
  std::uint64_t seed;
  double slack;
};

struct SweepSummary {
  SweepKind kind;
  std::size_t count = 0;
  double min_slack = 0.0;
  std::uint64_t argmin_seed = 0;
  std::vector<SweepSample> samples;
};

/// One sample of the named property. Positive slack means the property holds
/// with that margin. For BellTraces the slack is minus the worst trace-identity
/// residual; for FineAgreement it is 0 on agreement between the LP and the
/// four-inequality criterion and -1 otherwise.
double sweep_sample(SweepKind kind, Bipartition dims, std::uint64_t sample_seed);

SweepSummary run_sweep(const SweepParams& params, Execution exec = Execution::Parallel);

/// CSV with header seed,kind,slack; slack at 17 significant digits.
std::string to_csv(const SweepSummary& summary);

/// Test-input generator: cycles between G G^dagger densities, pure states and
/// mixtures of the two, so both entangled and highly mixed states appear.
DensityOperator random_test_state(std::size_t dim, Rng& rng);

/// Dirichlet(1) weights with roughly one in five entries forced to zero.
std::vector<double> random_probability_vector(std::size_t n, Rng& rng);

}  // namespace bellkit
