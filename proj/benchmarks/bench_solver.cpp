#include <benchmark/benchmark.h>

#include "wnk/solver.hpp"

using namespace wnk;

namespace {

void bm_solve(benchmark::State& state) {
  int h = (int)state.range(0);
  int w = (int)state.range(1);
  for (auto _ : state) benchmark::DoNotOptimize(solve_constraints(h, 2, w, {}));
}
BENCHMARK(bm_solve)->Args({2, 10})->Args({2, 14})->Args({2, 18})->Args({3, 10});

void bm_residuals(benchmark::State& state) {
  int h = (int)state.range(0);
  int w = (int)state.range(1);
  CorrelatorTable t = solve_constraints(h, 2, w, {});
  for (auto _ : state) benchmark::DoNotOptimize(residual_check(h, t, h + 1));
}
BENCHMARK(bm_residuals)->Args({2, 14})->Args({3, 10});

}  // namespace
