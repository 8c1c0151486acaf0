#include <benchmark/benchmark.h>

#include <vector>

#include "alexdimer/braid.hpp"
#include "alexdimer/murasugi.hpp"

using namespace alexdimer;

namespace {

// Alternating 3-strand closure with n crossings: 1, -2, 1, -2, ...
LinkDiagram zigzag(int n) {
  std::vector<int> word;
  for (int i = 0; i < n; ++i) word.push_back(i % 2 ? -2 : 1);
  return braid_closure("zigzag-" + std::to_string(n), 3, word);
}

void BM_BuildTruncatedGraph(benchmark::State& state) {
  const LinkDiagram d = zigzag(static_cast<int>(state.range(0)));
  const int seg = d.canonical_segment();
  for (auto _ : state)
    benchmark::DoNotOptimize(truncated_graph(d, seg));
}
BENCHMARK(BM_BuildTruncatedGraph)->Arg(6)->Arg(12)->Arg(18);

void BM_EnumerateMatchings(benchmark::State& state) {
  const LinkDiagram d = zigzag(static_cast<int>(state.range(0)));
  const FCGraph g = truncated_graph(d, d.canonical_segment());
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_matchings(g));
}
BENCHMARK(BM_EnumerateMatchings)->Arg(6)->Arg(12)->Arg(18);

void BM_StateSum(benchmark::State& state) {
  const LinkDiagram d = zigzag(static_cast<int>(state.range(0)));
  const int seg = d.canonical_segment();
  for (auto _ : state)
    benchmark::DoNotOptimize(state_sum(d, seg));
}
BENCHMARK(BM_StateSum)->Arg(6)->Arg(12)->Arg(18);

void BM_DeterminantOracle(benchmark::State& state) {
  const LinkDiagram d = zigzag(static_cast<int>(state.range(0)));
  const int seg = d.canonical_segment();
  for (auto _ : state)
    benchmark::DoNotOptimize(determinant_oracle(d, seg));
}
BENCHMARK(BM_DeterminantOracle)->Arg(6)->Arg(12)->Arg(18);

void BM_LaurentMultiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  LaurentPoly f, g;
  for (int i = -n; i <= n; ++i) {
    f.add_term(2 * i, Int(i * i + 1));
    g.add_term(2 * i, Int((i % 2 ? -1 : 1) * (n - std::abs(i) + 1)));
  }
  for (auto _ : state)
    benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_LaurentMultiply)->Arg(8)->Arg(32)->Arg(128);

void BM_DecomposeStateSum(benchmark::State& state) {
  const LinkDiagram d = zigzag(static_cast<int>(state.range(0)));
  const MurasugiSplit s = split_lowest(d);
  for (auto _ : state)
    benchmark::DoNotOptimize(decompose_state_sum(d, s));
}
BENCHMARK(BM_DecomposeStateSum)->Arg(6)->Arg(12);

void BM_CertifyTrapezoid(benchmark::State& state) {
  const LinkDiagram d = zigzag(4);  // length-2 split, full recursion
  for (auto _ : state)
    benchmark::DoNotOptimize(certify_trapezoid(d));
}
BENCHMARK(BM_CertifyTrapezoid);

}  // namespace

BENCHMARK_MAIN();
