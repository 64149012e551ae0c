#include <benchmark/benchmark.h>

#include <random>

#include "wnk/series.hpp"

using namespace wnk;

namespace {

TruncatedSeries dense_series(int cap, unsigned long seed) {
  std::mt19937_64 rng(seed);
  TruncatedSeries s(cap, -4);
  std::uniform_int_distribution<int> num(-9, 9);
  for (int n = 1; n <= cap; ++n)
    for (int e = 1; n * e <= cap; ++e)
      s.add_term(monomial_var(n, e), rat(num(rng), 1 + (int)(rng() % 7)));
  return s;
}

void bm_series_mul(benchmark::State& state) {
  int cap = (int)state.range(0);
  TruncatedSeries a = dense_series(cap, 1), b = dense_series(cap, 2);
  for (auto _ : state) benchmark::DoNotOptimize(series_mul(a, b));
}
BENCHMARK(bm_series_mul)->Arg(8)->Arg(12)->Arg(16);

void bm_series_exp(benchmark::State& state) {
  int cap = (int)state.range(0);
  TruncatedSeries a = dense_series(cap, 3);
  TruncatedSeries graded(cap, -4);
  for (auto& [m, c] : a.terms())
    if (m.weight() >= 1) graded.add_term(m, c);
  for (auto _ : state) benchmark::DoNotOptimize(series_exp(graded));
}
BENCHMARK(bm_series_exp)->Arg(8)->Arg(12);

}  // namespace
