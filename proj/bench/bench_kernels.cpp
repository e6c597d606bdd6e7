// Serial reference vs OpenMP kernels. Argument 0 selects the mode
// (0 serial, 1 parallel).

#include <benchmark/benchmark.h>

#include "homcount/census.hpp"
#include "homcount/kernels.hpp"
#include "homcount/random.hpp"

using namespace homcount;

namespace {

Exec mode(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

std::vector<Bitset> left_rows(const BipartiteGraph& g) {
  std::vector<Bitset> rows;
  for (std::size_t u = 0; u < g.n1(); ++u) rows.push_back(g.left_neighbors(u));
  return rows;
}

void BM_SubsetHistogram(benchmark::State& state) {
  const auto g = random_bipartite(100, 100, Rational(1, 2), 1);
  const auto rows = left_rows(g);
  for (auto _ : state) benchmark::DoNotOptimize(subset_intersection_histogram(rows, 3, mode(state)));
}

void BM_PairHistogram(benchmark::State& state) {
  const auto g = random_bipartite(1000, 1000, Rational(1, 2), 2);
  const auto rows = left_rows(g);
  for (auto _ : state) benchmark::DoNotOptimize(pair_intersection_histogram(rows, mode(state)));
}

void BM_EtaHistogram(benchmark::State& state) {
  const auto g = random_bipartite(1000, 1000, Rational(1, 4), 3);
  const auto rows = left_rows(g);
  for (auto _ : state) benchmark::DoNotOptimize(eta_weight_histogram(rows, mode(state)));
}

void BM_OneSided(benchmark::State& state) {
  // spanning subgraph of K_{4,4} with 8 edges
  const std::vector<Edge> edges{{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 0}, {1, 1}, {2, 2}, {3, 3}};
  const BipartiteGraph f(4, 4, edges);
  OneSidedPattern pattern;
  pattern.opposite_count = f.n2();
  for (std::size_t u = 0; u < f.n1(); ++u) pattern.adj.push_back(f.left_neighbors(u).members());
  const auto plan = plan_elimination(pattern);
  const auto g = random_bipartite(60, 60, Rational(3, 4), 4);
  const auto rows = left_rows(g);
  for (auto _ : state) benchmark::DoNotOptimize(one_sided_sum(pattern, plan, rows, mode(state)));
}

void BM_BruteForce(benchmark::State& state) {
  const auto f = families::cycle(6);
  const auto g = random_bipartite(6, 6, Rational(1, 2), 5).to_simple();
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_count(f, g, mode(state)));
}

void BM_Census(benchmark::State& state) {
  const auto g = random_bipartite(100, 100, Rational(1, 2), 6);
  for (auto _ : state) benchmark::DoNotOptimize(biclique_census(g, 3, 3, {kDefaultBudget, mode(state)}));
}

}  // namespace

BENCHMARK(BM_SubsetHistogram)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairHistogram)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EtaHistogram)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OneSided)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForce)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Census)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
