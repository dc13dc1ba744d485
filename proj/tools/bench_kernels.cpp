// Serial vs OpenMP comparison for the enumeration and sweep kernels.

#include <benchmark/benchmark.h>

#include "thetapos/semigroup.hpp"
#include "thetapos/sweep.hpp"
#include "thetapos/weyl.hpp"

using namespace thetapos;

namespace {

const ThetaStructure& f4_structure() {
  static const ThetaStructure ts = weyl::theta_structure(catalog_entry("e6-f4"), {0, 1});
  return ts;
}

void bench_enumerate(benchmark::State& state, Exec exec) {
  const auto& ts = f4_structure();
  for (auto _ : state) {
    auto group = weyl::enumerate_group(ts.rs, exec);
    benchmark::DoNotOptimize(group.size());
  }
}

void bench_theta_sweep(benchmark::State& state, Exec exec) {
  const auto& ts = f4_structure();
  static const std::vector<QMat> group = weyl::enumerate_group(ts.rs, Exec::Serial);
  for (auto _ : state) {
    auto lengths = sweep::theta_lengths(ts, group, exec);
    benchmark::DoNotOptimize(lengths.size());
  }
}

void bench_invariance(benchmark::State& state, Exec exec) {
  const auto& ts = f4_structure();
  for (auto _ : state) {
    auto bad = sweep::theta_length_invariance_violations(ts, exec);
    benchmark::DoNotOptimize(bad);
  }
}

void bench_reduced_words(benchmark::State& state, Exec exec) {
  auto rs = roots_from_diagram(catalog_entry("split-B3"));
  QMat w0 = weyl::longest_element(rs, {0, 1, 2});
  for (auto _ : state) {
    auto words = weyl::all_reduced_words(rs, w0, 12, exec);
    benchmark::DoNotOptimize(words.size());
  }
}

void bench_braid_sweep(benchmark::State& state, Exec exec) {
  auto m = som::model(6);
  for (auto _ : state) {
    int failures = sg::braid_identity_sweep(m, 64, 7, exec);
    benchmark::DoNotOptimize(failures);
  }
}

}  // namespace

BENCHMARK_CAPTURE(bench_enumerate, serial, Exec::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_enumerate, parallel, Exec::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_theta_sweep, serial, Exec::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_theta_sweep, parallel, Exec::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_invariance, serial, Exec::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_invariance, parallel, Exec::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_reduced_words, serial, Exec::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_reduced_words, parallel, Exec::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_braid_sweep, serial, Exec::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_braid_sweep, parallel, Exec::Parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
