#include <benchmark/benchmark.h>

#include "wnk/winf.hpp"

using namespace wnk;

namespace {

void bm_fermionic_bracket_window(benchmark::State& state) {
  int h = (int)state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(check_fermionic_brackets(h, 1, 1, 12, 1));
}
BENCHMARK(bm_fermionic_bracket_window)->Arg(2)->Arg(3);

void bm_gl_cocycle(benchmark::State& state) {
  BandedMatrix a = phi_matrix(-1, 1, 2, 1);
  BandedMatrix b = phi_matrix(1, 1, 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(measure_gl_cocycle(a, b, 16, 1));
}
BENCHMARK(bm_gl_cocycle);

}  // namespace
