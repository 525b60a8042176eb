#include <benchmark/benchmark.h>

#include "bicay/cartesian.hpp"
#include "bicay/catalog.hpp"
#include "bicay/constructions.hpp"
#include "bicay/perm_group.hpp"
#include "bicay/pipeline.hpp"

using namespace bicay;

static void BM_PrimeFactorization(benchmark::State& state) {
  Graph g = cartesian_product(moebius_kantor().graph, hypercube(2).graph);
  for (auto _ : state) benchmark::DoNotOptimize(prime_factorization(g).factors.size());
}
BENCHMARK(BM_PrimeFactorization);

static void BM_SchreierSims(benchmark::State& state) {
  MoebiusKantor mk = moebius_kantor();
  for (auto _ : state) {
    PermGroup g(16, {mk.alpha, mk.beta, mk.gamma, mk.delta});
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_SchreierSims);

static void BM_WitnessQ8(benchmark::State& state) {
  GroupTable q8 = GroupTable::dicyclic(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(construct_normal_bicayley(q8, "Q8").certificate.aut_order);
}
BENCHMARK(BM_WitnessQ8);

static void BM_GrrSearchD12(benchmark::State& state) {
  GroupTable d12 = find_group("D12")->table;
  for (auto _ : state) benchmark::DoNotOptimize(grr_search(d12).examined);
}
BENCHMARK(BM_GrrSearchD12);

static void BM_CatalogIsomorphismMatrix(benchmark::State& state) {
  auto groups = catalog_small_groups(16);
  for (auto _ : state) {
    int hits = 0;
    for (std::size_t i = 0; i < groups.size(); ++i)
      for (std::size_t j = i + 1; j < groups.size(); ++j)
        if (groups[i]->table.order() == groups[j]->table.order())
          hits += are_isomorphic(groups[i]->table, groups[j]->table);
    benchmark::DoNotOptimize(hits);
  }
}
BENCHMARK(BM_CatalogIsomorphismMatrix);
