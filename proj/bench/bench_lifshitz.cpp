/*
 * bench_lifshitz.cpp -- serial reference vs OpenMP Matsubara kernel.
 *
 * Low temperature makes the sum long (thousands of terms), which is the
 * regime the parallel kernel targets.
 */
#include <benchmark/benchmark.h>

#include "casimir/lifshitz.hpp"

using namespace casimir;

namespace {

const DielectricModel model = DielectricModel::plasma(12.5);

void BM_free_energy_serial(benchmark::State& state) {
  const PlatesConfig cfg{1.0, static_cast<double>(state.range(0))};
  for (auto _ : state) {
    auto r = free_energy_plates(cfg, model, Prescription::as_is, {},
                                Execution::serial);
    benchmark::DoNotOptimize(r.value_eV_per_um2);
  }
}

void BM_free_energy_parallel(benchmark::State& state) {
  const PlatesConfig cfg{1.0, static_cast<double>(state.range(0))};
  for (auto _ : state) {
    auto r = free_energy_plates(cfg, model, Prescription::as_is, {},
                                Execution::parallel);
    benchmark::DoNotOptimize(r.value_eV_per_um2);
  }
}

void BM_force_zero_temperature(benchmark::State& state) {
  for (auto _ : state) {
    double f = force_plates_zero_temperature(1.0, model);
    benchmark::DoNotOptimize(f);
  }
}

} // namespace

BENCHMARK(BM_free_energy_serial)->Arg(300)->Arg(20)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_free_energy_parallel)->Arg(300)->Arg(20)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_force_zero_temperature)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
