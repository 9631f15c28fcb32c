#include <benchmark/benchmark.h>

#include <cstdio>
#include <filesystem>
#include <random>

#include "hyped/generator.hpp"
#include "hyped/line_graph.hpp"
#include "hyped/oracle.hpp"

using namespace hyped;

namespace {

Hypergraph graph_for(std::int64_t n_edges) {
  return powerlaw_hypergraph(n_edges, static_cast<std::size_t>(n_edges), 2.0, 2,
                             9, 42);
}

Oracle oracle_for(const Hypergraph& h, double budget_l) {
  AssignmentConfig cfg;
  cfg.budget_l = budget_l;
  cfg.selection = SelectStrategy::Degree;
  cfg.seed = 42;
  return build_oracle(h, cfg, 6);
}

void BM_build_oracle(benchmark::State& state) {
  Hypergraph h = graph_for(state.range(0));
  for (auto _ : state) {
    Oracle o = oracle_for(h, 30.0);
    benchmark::DoNotOptimize(o.labels);
  }
}

void BM_query_h2h(benchmark::State& state) {
  Hypergraph h = graph_for(1000);
  Oracle o = oracle_for(h, static_cast<double>(state.range(0)));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<EdgeId> pick(0, h.num_edges() - 1);
  for (auto _ : state) {
    DistanceEstimate est = estimate_h2h(o, pick(rng), pick(rng), 2);
    benchmark::DoNotOptimize(est.estimate);
  }
}

void BM_query_profile(benchmark::State& state) {
  Hypergraph h = graph_for(1000);
  Oracle o = oracle_for(h, static_cast<double>(state.range(0)));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<EdgeId> pick(0, h.num_edges() - 1);
  for (auto _ : state) {
    DistanceProfile profile = profile_h2h(o, pick(rng), pick(rng));
    benchmark::DoNotOptimize(profile.entries);
  }
}

void BM_query_v2v(benchmark::State& state) {
  Hypergraph h = graph_for(1000);
  Oracle o = oracle_for(h, static_cast<double>(state.range(0)));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<VertexId> pick(0, h.num_vertices() - 1);
  for (auto _ : state) {
    DistanceEstimate est = estimate_v2v(o, h, pick(rng), pick(rng), 2);
    benchmark::DoNotOptimize(est.estimate);
  }
}

void BM_exact_bfs(benchmark::State& state) {
  Hypergraph h = graph_for(1000);
  AdjacencyCache cache(h);
  const SAdjacency& adj = cache.at(2);  // prebuilt: the loop times BFS alone
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<EdgeId> pick(0, h.num_edges() - 1);
  for (auto _ : state) {
    Dist d = exact_s_distance(h, adj, pick(rng), pick(rng), 2);
    benchmark::DoNotOptimize(d);
  }
}

void BM_save_load(benchmark::State& state) {
  Hypergraph h = graph_for(state.range(0));
  Oracle o = oracle_for(h, 30.0);
  std::filesystem::path path =
      std::filesystem::temp_directory_path() / "hyped_bench_oracle.txt";
  for (auto _ : state) {
    save_oracle(o, path);
    Oracle back = load_oracle(path);
    benchmark::DoNotOptimize(back.labels);
  }
  std::filesystem::remove(path);
}

BENCHMARK(BM_build_oracle)->Range(256, 2048)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_query_h2h)->Arg(10)->Arg(30)->Arg(100);
BENCHMARK(BM_query_profile)->Arg(30);
BENCHMARK(BM_query_v2v)->Arg(30);
BENCHMARK(BM_exact_bfs);
BENCHMARK(BM_save_load)->Range(256, 1024)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
