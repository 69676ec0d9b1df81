#include <benchmark/benchmark.h>

#include "grove/census.hpp"
#include "grove/digraph.hpp"
#include "grove/embedders.hpp"
#include "grove/generators.hpp"

namespace {

void BM_LevelDigraph(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto level = grove::level_digraph(k, 2);
    benchmark::DoNotOptimize(level.graph.edge_count());
  }
}
BENCHMARK(BM_LevelDigraph)->Arg(6)->Arg(10)->Arg(14);

void BM_CountTwoPaths(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = grove::random_min_outdegree(n, 16, 7);
  const auto all = grove::VertexSet::all(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(grove::count_two_paths(g, all, all, all));
}
BENCHMARK(BM_CountTwoPaths)->Arg(100)->Arg(400);

void BM_BruteForceEmbed(benchmark::State& state) {
  const auto host = grove::random_min_outdegree(60, 8, 13);
  const auto pattern = grove::spider(2, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(grove::brute_force_embed(host, pattern));
}
BENCHMARK(BM_BruteForceEmbed);

void BM_FindSpider2(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const auto host = grove::random_min_outdegree(
      300, grove::spider2_degree_threshold(l), 11);
  for (auto _ : state)
    benchmark::DoNotOptimize(grove::find_spider2(host, l));
}
BENCHMARK(BM_FindSpider2)->Arg(2)->Arg(5);

void BM_OrientedTreeEnumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(grove::enumerate_oriented_trees(n).size());
}
BENCHMARK(BM_OrientedTreeEnumeration)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
