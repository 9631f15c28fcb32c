#include <benchmark/benchmark.h>

#include "hyped/connectivity.hpp"
#include "hyped/generator.hpp"

using namespace hyped;

namespace {

Hypergraph graph_for(std::int64_t n_edges) {
  return powerlaw_hypergraph(n_edges, static_cast<std::size_t>(n_edges), 2.0, 2,
                             9, 42);
}

void BM_components_staged(benchmark::State& state) {
  Hypergraph h = graph_for(state.range(0));
  for (auto _ : state) {
    auto [cc, ledger] = find_connected_components(h, 6);
    benchmark::DoNotOptimize(cc.comp_of);
  }
  state.SetItemsProcessed(state.iterations() * h.num_edges());
}

void BM_components_independent(benchmark::State& state) {
  Hypergraph h = graph_for(state.range(0));
  for (auto _ : state) {
    auto cc = baseline_cc_independent(h, 6);
    benchmark::DoNotOptimize(cc.comp_of);
  }
  state.SetItemsProcessed(state.iterations() * h.num_edges());
}

void BM_components_linegraph(benchmark::State& state) {
  Hypergraph h = graph_for(state.range(0));
  for (auto _ : state) {
    auto cc = baseline_cc_linegraph(h, 6);
    benchmark::DoNotOptimize(cc.comp_of);
  }
  state.SetItemsProcessed(state.iterations() * h.num_edges());
}

void BM_adjacency_cache(benchmark::State& state) {
  Hypergraph h = graph_for(state.range(0));
  for (auto _ : state) {
    AdjacencyCache cache(h);
    for (std::uint32_t s = 1; s <= 4; ++s) {
      benchmark::DoNotOptimize(cache.at(s).adj);
    }
  }
}

BENCHMARK(BM_components_staged)->Range(256, 4096);
BENCHMARK(BM_components_independent)->Range(256, 4096);
BENCHMARK(BM_components_linegraph)->Range(256, 2048);
BENCHMARK(BM_adjacency_cache)->Range(256, 4096);

}  // namespace

BENCHMARK_MAIN();
