#include <benchmark/benchmark.h>

#include <random>

#include "cavitybec/fluctuations.hpp"
#include "cavitybec/linalg.hpp"
#include "cavitybec/meanfield.hpp"
#include "cavitybec/observables.hpp"

namespace {

using namespace cavitybec;

void BM_eigh(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  SymmetricMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a.set(i, j, dist(rng));
  for (auto _ : state) benchmark::DoNotOptimize(eigh(a));
}
BENCHMARK(BM_eigh)->Arg(3)->Arg(10)->Arg(32)->Arg(64);

void BM_solve(benchmark::State& state) {
  const ModelParams p =
      ModelParams::make(1.0, -100.0, -20.0, static_cast<double>(state.range(1)) / 10.0,
                        static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_mean_field(p));
}
BENCHMARK(BM_solve)->Args({2, 110})->Args({10, 110})->Args({10, 101})->Args({10, 150});

// Mean field, fluctuations and observables for one point.
void BM_pipeline(benchmark::State& state) {
  const ModelParams p = ModelParams::make(1.0, -100.0, -20.0, 12.0, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const MeanFieldSolution sol = solve_mean_field(p);
    const FluctuationResult fl = analyze_fluctuations(p, sol);
    benchmark::DoNotOptimize(compute_observables(sol, fl));
  }
}
BENCHMARK(BM_pipeline)->Arg(2)->Arg(10)->Arg(20);

}  // namespace
BENCHMARK_MAIN();
