// Serial reference path against the OpenMP path for the sweep kernels.
#include <benchmark/benchmark.h>

#include "bellkit/bell.hpp"
#include "bellkit/feasibility.hpp"
#include "bellkit/sweep.hpp"

namespace {

using bellkit::Execution;
using bellkit::SweepKind;

template <SweepKind Kind, Execution Exec>
void BM_Sweep(benchmark::State& state) {
  const bellkit::SweepParams params{Kind, static_cast<std::size_t>(state.range(0)), 1, {2, 2}};
  for (auto _ : state) benchmark::DoNotOptimize(bellkit::run_sweep(params, Exec).min_slack);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Optimizer(benchmark::State& state) {
  const auto rho = bellkit::presets::werner(0.8);
  for (auto _ : state) benchmark::DoNotOptimize(bellkit::maximize_violation(rho, 0).beta_max);
}

void BM_JointFeasible(benchmark::State& state) {
  const auto s = bellkit::BellScenario::from_settings(
      bellkit::presets::singlet(),
      {bellkit::direction_from_angles(0, 0), bellkit::direction_from_angles(90, 0),
       bellkit::direction_from_angles(45, 0), bellkit::direction_from_angles(135, 0)});
  const auto m = bellkit::marginals_from_scenario(s);
  for (auto _ : state) benchmark::DoNotOptimize(bellkit::joint_feasible(m).feasible);
}

}  // namespace

BENCHMARK(BM_Sweep<SweepKind::ConcavityVonNeumann, Execution::Serial>)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep<SweepKind::ConcavityVonNeumann, Execution::Parallel>)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep<SweepKind::Tsirelson, Execution::Serial>)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep<SweepKind::Tsirelson, Execution::Parallel>)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep<SweepKind::FineAgreement, Execution::Serial>)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep<SweepKind::FineAgreement, Execution::Parallel>)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Optimizer)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JointFeasible);

BENCHMARK_MAIN();
