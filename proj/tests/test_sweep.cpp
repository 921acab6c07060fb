#include <doctest.h>

#include <sstream>

#include "bellkit/sweep.hpp"

using namespace bellkit;

TEST_CASE("serial and parallel sweeps are bit-identical") {
  for (const SweepKind kind : all_sweep_kinds()) {
    const SweepParams p{kind, 64, 11, {2, 2}};
    const auto serial = run_sweep(p, Execution::Serial);
    const auto parallel = run_sweep(p, Execution::Parallel);
    CAPTURE(to_string(kind));
    REQUIRE(serial.samples.size() == parallel.samples.size());
    for (std::size_t i = 0; i < serial.samples.size(); ++i) {
      CHECK(serial.samples[i].seed == parallel.samples[i].seed);
      CHECK(serial.samples[i].slack == parallel.samples[i].slack);
    }
    CHECK(to_csv(serial) == to_csv(parallel));
  }
}

TEST_CASE("every sweep kind holds on a small sample") {
  for (const SweepKind kind : all_sweep_kinds()) {
    const double floor = kind == SweepKind::BellTraces ? -1e-8 : -1e-10;
    for (const Bipartition dims : {Bipartition{2, 2}, Bipartition{2, 4}}) {
      const auto s = run_sweep({kind, 100, 3, dims});
      CAPTURE(to_string(kind));
      CHECK(s.count == 100);
      CHECK(s.min_slack >= floor);
    }
  }
}

TEST_CASE("kind names round-trip") {
  for (const SweepKind kind : all_sweep_kinds()) CHECK(parse_sweep_kind(to_string(kind)) == kind);
  CHECK_FALSE(parse_sweep_kind("concavity"));
  CHECK(std::string(to_string(SweepKind::ArakiLieb)) == "araki-lieb");
}

TEST_CASE("sample seeds and the reported minimum are consistent") {
  const auto s = run_sweep({SweepKind::SubadditivityVonNeumann, 50, 5, {2, 2}}, Execution::Serial);
  double lowest = s.samples.front().slack;
  for (std::size_t i = 0; i < s.samples.size(); ++i) {
    CHECK(s.samples[i].seed == derive_seed(5, i));
    CHECK(sweep_sample(s.kind, {2, 2}, s.samples[i].seed) == s.samples[i].slack);
    lowest = std::min(lowest, s.samples[i].slack);
  }
  CHECK(s.min_slack == lowest);
  CHECK(sweep_sample(s.kind, {2, 2}, s.argmin_seed) == lowest);
}

TEST_CASE("CSV layout") {
  const auto s = run_sweep({SweepKind::ArakiLieb, 3, 1, {2, 2}}, Execution::Serial);
  std::istringstream in(to_csv(s));
  std::string line;
  std::getline(in, line);
  CHECK(line == "seed,kind,slack");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(line.find(",araki-lieb,") != std::string::npos);
  }
  CHECK(rows == 3);
}

TEST_CASE("parallel failures propagate") {
  CHECK_THROWS_AS(evaluate_samples(
                      40, 0,
                      [](std::uint64_t seed) -> int {
                        if (seed % 7 == 0) throw std::runtime_error("boom");
                        return 1;
                      },
                      Execution::Parallel),
                  std::runtime_error);
}

TEST_CASE("probability vectors and test states are valid") {
  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_probability_vector(8, rng);
    double total = 0;
    for (const double x : p) {
      CHECK(x >= 0.0);
      total += x;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_NOTHROW(random_test_state(4, rng));
  }
}
