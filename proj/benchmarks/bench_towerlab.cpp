#include <benchmark/benchmark.h>

#include "towerlab/automorphism.hpp"
#include "towerlab/boxed.hpp"
#include "towerlab/construct.hpp"
#include "towerlab/graph.hpp"
#include "towerlab/tower.hpp"

using namespace towerlab;

static void BM_AutomorphismGroup(benchmark::State& state,
                                 const std::string& spec) {
  GroupPtr g = construct_named(spec);
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(g));
}
BENCHMARK_CAPTURE(BM_AutomorphismGroup, d8, std::string("D8"));
BENCHMARK_CAPTURE(BM_AutomorphismGroup, q8, std::string("Q8"));
BENCHMARK_CAPTURE(BM_AutomorphismGroup, s4, std::string("S4"));
BENCHMARK_CAPTURE(BM_AutomorphismGroup, c2cubed, std::string("C2xC2xC2"));

static void BM_TowerRun(benchmark::State& state, const std::string& spec) {
  GroupPtr g = construct_named(spec);
  for (auto _ : state) benchmark::DoNotOptimize(run_tower(g));
}
BENCHMARK_CAPTURE(BM_TowerRun, d8, std::string("D8"));
BENCHMARK_CAPTURE(BM_TowerRun, c3c3, std::string("C3xC3"));

static void BM_GraphAut(benchmark::State& state) {
  std::vector<std::pair<int, int>> edges;
  const int n = 12;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  ColoredGraph g = make_graph(n, {}, edges);
  for (auto _ : state) benchmark::DoNotOptimize(graph_automorphism_group(g));
}
BENCHMARK(BM_GraphAut);

static void BM_BoxedHeight(benchmark::State& state) {
  BoxTree tree = standard_box_tree(static_cast<int>(state.range(0)));
  IsoAssignment assign = assign_all_one(tree);
  for (auto _ : state) {
    BoxedBuild build = build_boxed(tree, assign);
    benchmark::DoNotOptimize(boxed_tower_height(build));
  }
}
BENCHMARK(BM_BoxedHeight)->Arg(1)->Arg(2);

BENCHMARK_MAIN();
