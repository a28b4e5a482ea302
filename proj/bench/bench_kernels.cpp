#include <benchmark/benchmark.h>

#include "vklab/kernels.hpp"
#include "vklab/measures.hpp"

using namespace vklab;

namespace {

void BM_ExtensionSerial(benchmark::State& state) {
  const MatGF u = canonical_unipotent(Partition{static_cast<int>(state.range(0)) - 2, 1, 1}, field(3));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::extension_histogram_serial(u));
}
void BM_ExtensionOmp(benchmark::State& state) {
  const MatGF u = canonical_unipotent(Partition{static_cast<int>(state.range(0)) - 2, 1, 1}, field(3));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::extension_histogram_omp(u));
}
BENCHMARK(BM_ExtensionSerial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExtensionOmp)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_UnitriangularSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::unitriangular_histogram_serial(static_cast<int>(state.range(0)), field(2)));
}
void BM_UnitriangularOmp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::unitriangular_histogram_omp(static_cast<int>(state.range(0)), field(2)));
}
BENCHMARK(BM_UnitriangularSerial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UnitriangularOmp)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_HaarTrialsSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::haar_trials_serial(field(2), 400, static_cast<int>(state.range(0)), 42, 64));
}
void BM_HaarTrialsOmp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::haar_trials_omp(field(2), 400, static_cast<int>(state.range(0)), 42, 64));
}
BENCHMARK(BM_HaarTrialsSerial)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HaarTrialsOmp)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_MarkovTrials(benchmark::State& state, bool parallel) {
  const auto meas = characteristic_measure(ThomaSpec::from_atoms({Rational(1, 2), Rational(1, 4)}, {Rational(1, 4)}),
                                           GroundParams::from_q(2));
  const CylinderFn cyl = [&](const Partition& p) -> Rational { return meas.cylinder(p); };
  const CountFn counts = sampler_counts(2, false);
  for (auto _ : state) {
    if (parallel) benchmark::DoNotOptimize(kernels::markov_trials_omp(cyl, counts, 10, 64, 1));
    else benchmark::DoNotOptimize(kernels::markov_trials_serial(cyl, counts, 10, 64, 1));
  }
}
BENCHMARK_CAPTURE(BM_MarkovTrials, serial, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_MarkovTrials, omp, true)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
