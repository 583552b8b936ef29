#include <benchmark/benchmark.h>

#include <random>

#include "splab/insertion.hpp"
#include "splab/mixed_jdt.hpp"
#include "splab/sagan_worley.hpp"
#include "splab/symfunc.hpp"

using namespace splab;

namespace {

Word random_word(std::size_t len, int n, unsigned seed) {
  std::mt19937 rng(seed);
  Word w(len);
  for (int& v : w) v = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
  return w;
}

void BM_MixedInsertWord(benchmark::State& state) {
  const Word w = random_word(static_cast<std::size_t>(state.range(0)), 8, 1);
  for (auto _ : state) benchmark::DoNotOptimize(mixed_insert_word(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MixedInsertWord)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_MixedRectifyStaircase(benchmark::State& state) {
  const HoleTableau start = staircase(random_word(static_cast<std::size_t>(state.range(0)), 6, 2));
  for (auto _ : state) benchmark::DoNotOptimize(mixed_rectify(start));
}
BENCHMARK(BM_MixedRectifyStaircase)->DenseRange(4, 16, 4);

void BM_SWRectifyAll(benchmark::State& state) {
  const auto all = enumerate_tableaux(make_skew({5, 3, 1}, {2, 1}), 3, FillMode::qtableau);
  for (auto _ : state)
    for (const auto& t : all) benchmark::DoNotOptimize(sw_rectify(t));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * all.size()));
}
BENCHMARK(BM_SWRectifyAll);

void BM_SchurP(benchmark::State& state) {
  const SkewShape shape(StrictPartition{4, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(schur_P_poly(shape, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SchurP)->DenseRange(3, 5);

void BM_BCoeffs(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(b_coeffs({5, 3, 1}, {2, 1}));
}
BENCHMARK(BM_BCoeffs);

}  // namespace
BENCHMARK_MAIN();
