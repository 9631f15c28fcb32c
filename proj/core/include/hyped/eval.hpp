#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyped/connectivity.hpp"
#include "hyped/hypergraph.hpp"
#include "hyped/oracle.hpp"

namespace hyped {

enum class QueryKind : std::uint8_t { HH, VV, VE };

struct Query {
  QueryKind kind = QueryKind::HH;
  std::uint32_t src = 0;
  std::uint32_t dst = 0;
  std::uint32_t s = 1;
};

struct QueryBatch {
  std::vector<Query> queries;
  // provenance
  std::uint32_t per_s = 0;
  double cross_frac = 0;
  std::uint64_t seed = 0;
  // levels where no same-component pair exists
  std::vector<std::uint32_t> empty_levels;
};

struct PerQueryRow {
  Query q;
  double truth = 0;
  DistanceEstimate est;
};

struct EvalReport {
  double mae = 0;
  double rmse = 0;
  double time_per_query_us = 0;
  double off_seconds = 0;
  // |est - true| quantiles over the finite-finite pairs: p50, p90, p99, max
  double l1_p50 = 0, l1_p90 = 0, l1_p99 = 0, l1_max = 0;
  double coverage_rate = 0;     // fraction of queries with uncovered status
  double reach_error_rate = 0;  // exactly-one-infinite disagreements
  std::size_t n_queries = 0;
  std::size_t n_scored = 0;  // both finite, used for MAE/RMSE
  std::size_t n_both_infinite = 0;
  std::vector<PerQueryRow> rows;
};

// Stratified sampler: for each s in [1, cc.s_max], `per_s` same-component
// pairs (components weighted by size-choose-2) plus ceil(per_s * cross_frac)
// cross-component pairs where possible. Deterministic given the seed.
QueryBatch sample_queries(const Hypergraph& h, const SComponents& cc,
                          std::uint32_t per_s, double cross_frac,
                          std::uint64_t seed);

double exact_query_distance(const Hypergraph& h, AdjacencyCache& cache,
                            const Query& q);

EvalReport evaluate(const Oracle& o, const Hypergraph& h,
                    const QueryBatch& batch, AdjacencyCache& ground_truth);

// Average s-distance from e to the other members of its level-s component;
// nullopt for singleton components or when e is absent at level s.
std::optional<double> s_closeness_exact(const Hypergraph& h,
                                        AdjacencyCache& cache,
                                        const SComponents& cc, EdgeId e,
                                        std::uint32_t s);
std::optional<double> s_closeness_estimated(const Oracle& o,
                                            const SComponents& cc, EdgeId e,
                                            std::uint32_t s);

// Max over the hyperedges containing v of their component closeness values,
// skipping undefined members; nullopt when all are undefined.
std::optional<double> vertex_s_closeness_exact(const Hypergraph& h,
                                               AdjacencyCache& cache,
                                               const SComponents& cc,
                                               VertexId v, std::uint32_t s);
std::optional<double> vertex_s_closeness_estimated(const Oracle& o,
                                                   const Hypergraph& h,
                                                   const SComponents& cc,
                                                   VertexId v, std::uint32_t s);

struct MapeLar {
  double mape = 0;
  double lar = 0;
  std::size_t n_mape = 0;      // pairs with true > 0
  std::size_t n_lar = 0;       // pairs with est > 0 and true > 0
  std::size_t n_excluded = 0;  // pairs excluded from MAPE
};

MapeLar mape_lar(const std::vector<double>& estimates,
                 const std::vector<double>& truths);

// Average precision of the estimated top-k ids against the exact top-k set;
// exact-ranking ties at the k boundary are all acceptable.
double avep_at_k(const std::vector<RankedNeighbor>& ranked_est,
                 const std::vector<RankedNeighbor>& ranked_true,
                 std::uint32_t k);

}  // namespace hyped
