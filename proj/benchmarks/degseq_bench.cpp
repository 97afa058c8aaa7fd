#include <benchmark/benchmark.h>

#include <random>

#include "degseq/coloring.hpp"
#include "degseq/connect.hpp"
#include "degseq/construct.hpp"
#include "degseq/sequence.hpp"

using namespace degseq;

namespace {

Graph random_graph(int n, int max_deg, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  Graph g(n);
  for (auto [a, b] : pairs)
    if (g.degree(a) < max_deg && g.degree(b) < max_deg) g.add_edge(a, b);
  return g;
}

}  // namespace

static void BM_IsGraphic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  std::vector<DegreeSequence> pool;
  for (int i = 0; i < 256; ++i) {
    std::vector<int> d(n);
    for (int& x : d) x = std::uniform_int_distribution<int>(0, n - 1)(rng);
    pool.push_back(normalize(d));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(is_graphic(pool[i++ & 255]));
}
BENCHMARK(BM_IsGraphic)->Arg(30)->Arg(1000)->Arg(100000);

static void BM_HsColoring(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 6, 2);
  for (auto _ : state) benchmark::DoNotOptimize(hs_coloring(g, g.max_degree() + 1));
}
BENCHMARK(BM_HsColoring)->Arg(40)->Arg(200)->Arg(1000);

static void BM_EdgeConnectivity(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 8, 3);
  for (auto _ : state) benchmark::DoNotOptimize(edge_connectivity(g).lambda);
}
BENCHMARK(BM_EdgeConnectivity)->Arg(20)->Arg(100)->Arg(300);

static void BM_EquitableExact(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 4, 4);
  for (auto _ : state) benchmark::DoNotOptimize(equitable_exact(g, g.max_degree()));
}
BENCHMARK(BM_EquitableExact)->Arg(12)->Arg(18)->Arg(24);

static void BM_FactorRealization(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<int> d(n, 6);
  for (int i = 0; i < n / 4; ++i) d[i] = 9;
  const auto pi = normalize(d);
  for (auto _ : state) benchmark::DoNotOptimize(thm3_construct(pi, FactorSpec{2}).graph.edge_count());
}
BENCHMARK(BM_FactorRealization)->Arg(16)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
