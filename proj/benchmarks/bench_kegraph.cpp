#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "kegraph/census.hpp"
#include "kegraph/critical.hpp"
#include "kegraph/generators.hpp"
#include "kegraph/independence.hpp"
#include "kegraph/ke_analysis.hpp"
#include "kegraph/matching.hpp"
#include "kegraph/theorem_suite.hpp"

using namespace kegraph;

namespace {

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

void BM_MaxMatching(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = random_graph(n, 4.0 / n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(max_matching(g));
  state.SetComplexityN(n);
}
BENCHMARK(BM_MaxMatching)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_IndependenceNumber(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = random_graph(n, 0.2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(independence_number(g));
}
BENCHMARK(BM_IndependenceNumber)->DenseRange(20, 60, 10);

void BM_CriticalDifference(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = random_graph(n, 3.0 / n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(critical_difference(g));
}
BENCHMARK(BM_CriticalDifference)->RangeMultiplier(4)->Range(16, 1024);

void BM_Ker(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = random_graph(n, 3.0 / n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(ker(g));
}
BENCHMARK(BM_Ker)->RangeMultiplier(4)->Range(16, 256);

void BM_AnalyzeRandomKe(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  const Graph g = gen_random_ke(s, s / 2 + 1, 0.3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(analyze(g));
}
BENCHMARK(BM_AnalyzeRandomKe)->DenseRange(4, 16, 4);

void BM_TheoremSuite(benchmark::State& state) {
  const Graph g = gen_random_ke(static_cast<int>(state.range(0)), 3, 0.3, 6);
  for (auto _ : state) benchmark::DoNotOptimize(theorem_suite(g));
}
BENCHMARK(BM_TheoremSuite)->DenseRange(4, 8, 2);

void BM_Census(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census_count(n));
}
BENCHMARK(BM_Census)->DenseRange(5, 8, 1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
