#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>

#include "cgt/gen.hpp"
#include "cgt/matching.hpp"
#include "cgt/oracle.hpp"
#include "cgt/tjoin.hpp"

namespace {

using namespace cgt;

UndirectedGraph nonneg_graph(int n, int m, std::uint64_t seed) {
  Rng rng(seed);
  UndirectedGraph g = random_topology(n, m, rng);
  for (EdgeId e = 1; e <= g.num_edges(); ++e) g.set_weight(e, rng.uniform(0, 100));
  return g;
}

TerminalSet random_terminals(int n, int size, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<VertexId> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), VertexId{1});
  for (std::size_t i = pool.size(); i > 1; --i) {
    std::swap(pool[i - 1], pool[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1))]);
  }
  pool.resize(static_cast<std::size_t>(size));
  return TerminalSet(pool);
}

void BM_PerfectMatchingComplete(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(7);
  MatchingProblem p{n, {}};
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) p.edges.push_back({u, v, rng.uniform(-50, 100)});
  }
  for (auto _ : state) benchmark::DoNotOptimize(min_weight_perfect_matching(p));
  state.SetComplexityN(n);
}
BENCHMARK(BM_PerfectMatchingComplete)->RangeMultiplier(2)->Range(16, 128)->Complexity();

void BM_MinTjoinNonneg(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = nonneg_graph(n, 5 * n, 11);
  const auto t = random_terminals(n, n / 5, 12);
  for (auto _ : state) benchmark::DoNotOptimize(min_tjoin(g, t));
}
BENCHMARK(BM_MinTjoinNonneg)->Arg(100)->Arg(300)->Arg(600)->Unit(benchmark::kMillisecond);

void BM_MinTjoinConservative(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = gen_conservative({n, 5 * n, 20, 13});
  const auto t = random_terminals(n, n / 5, 14);
  for (auto _ : state) benchmark::DoNotOptimize(min_tjoin(g, t));
}
BENCHMARK(BM_MinTjoinConservative)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_IsConservative(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = gen_conservative({n, 4 * n, 20, 15});
  for (auto _ : state) benchmark::DoNotOptimize(is_conservative(g));
}
BENCHMARK(BM_IsConservative)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_OracleMinOddCycle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = gen_conservative({n, 2 * n, 5, 16});
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::bf_min_cycle(g, oracle::CycleParity::kOdd));
  }
}
BENCHMARK(BM_OracleMinOddCycle)->DenseRange(6, 10, 2);

}  // namespace

BENCHMARK_MAIN();
