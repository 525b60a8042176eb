#include <benchmark/benchmark.h>

#include "bicay/aut.hpp"
#include "bicay/cartesian.hpp"
#include "bicay/constructions.hpp"
#include "bicay/graph.hpp"

using namespace bicay;

namespace {

Graph prism(int n) {
  Graph c(n);
  for (int i = 0; i < n; ++i) c.add_edge(i, (i + 1) % n);
  Graph k2(2);
  k2.add_edge(0, 1);
  return cartesian_product(c, k2);
}

}  // namespace

static void BM_AutMoebiusKantor(benchmark::State& state) {
  Graph g = moebius_kantor().graph;
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(g).order());
}
BENCHMARK(BM_AutMoebiusKantor);

static void BM_AutHypercube(benchmark::State& state) {
  Graph g = hypercube(static_cast<int>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(g).order());
}
BENCHMARK(BM_AutHypercube)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

static void BM_AutPrism(benchmark::State& state) {
  Graph g = prism(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(g).order());
}
BENCHMARK(BM_AutPrism)->Arg(8)->Arg(16)->Arg(32);

static void BM_VertexStabilizerCheck(benchmark::State& state) {
  // The inner loop of the GRR search.
  Graph g = cayley_graph(GroupTable::elementary_abelian_2(4), {1, 2, 4, 8, 15});
  for (auto _ : state) benchmark::DoNotOptimize(has_nontrivial_vertex_stabilizer(g, 0));
}
BENCHMARK(BM_VertexStabilizerCheck);

BENCHMARK_MAIN();
