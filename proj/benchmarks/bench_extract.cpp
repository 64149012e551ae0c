#include <benchmark/benchmark.h>

#include "wnk/vertex.hpp"

using namespace wnk;

namespace {

void bm_extract_j(benchmark::State& state) {
  int h = (int)state.range(0);
  int cap = (int)state.range(1);
  for (auto _ : state)
    benchmark::DoNotOptimize(extract_J(h, 2, -3, 3, cap, {false, false}));
}
BENCHMARK(bm_extract_j)->Args({2, 10})->Args({2, 16})->Args({3, 12});

void bm_extract_j_reduced_shifted(benchmark::State& state) {
  int h = (int)state.range(0);
  int cap = (int)state.range(1);
  for (auto _ : state)
    benchmark::DoNotOptimize(extract_J(h, h + 1, -(h + 1), cap / h + 1, cap, {true, true}));
}
BENCHMARK(bm_extract_j_reduced_shifted)->Args({2, 18})->Args({3, 12});

}  // namespace
