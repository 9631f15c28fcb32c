#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "hyped/eval.hpp"
#include "hyped/generator.hpp"

using namespace hyped;

namespace {

AssignmentConfig full_budget(std::uint32_t d_min) {
  AssignmentConfig cfg;
  cfg.budget_q = 1u << 30;
  cfg.d_min = d_min;
  cfg.selection = SelectStrategy::Degree;
  cfg.seed = 5;
  return cfg;
}

}  // namespace

TEST_CASE("stratified sampling hits every level that admits a pair") {
  Hypergraph h = test::toy();
  auto [cc, ledger] = find_connected_components(h, 3);
  QueryBatch batch = sample_queries(h, cc, 2, 0.5, 9);
  bool level2 = false;
  for (const Query& q : batch.queries) {
    CHECK(q.src != q.dst);
    if (q.s == 2 && cc.comp_of[1][q.src] == cc.comp_of[1][q.dst]) {
      // the only multi-member level-2 component is {e2, e3, e4}
      CHECK(cc.comp_of[1][q.src] == 1);
      level2 = true;
    }
  }
  CHECK(level2);
  // level 3 has only singletons: no same-component pair possible
  CHECK(std::find(batch.empty_levels.begin(), batch.empty_levels.end(), 3) !=
        batch.empty_levels.end());

  QueryBatch again = sample_queries(h, cc, 2, 0.5, 9);
  CHECK(batch.queries.size() == again.queries.size());
  for (std::size_t i = 0; i < batch.queries.size(); ++i) {
    CHECK(batch.queries[i].src == again.queries[i].src);
    CHECK(batch.queries[i].dst == again.queries[i].dst);
  }
  CHECK(sample_queries(h, cc, 0, 0.0, 1).queries.empty());
}

TEST_CASE("evaluating a full-budget oracle yields zero error") {
  Hypergraph h = random_hypergraph(30, 60, 2, 6, 61);
  Oracle o = build_oracle(h, full_budget(2), 4);
  auto [cc, ledger] = find_connected_components(h, 4);
  AdjacencyCache cache(h);
  QueryBatch batch = sample_queries(h, cc, 25, 0.3, 2);
  EvalReport report = evaluate(o, h, batch, cache);
  CHECK(report.n_queries == batch.queries.size());
  CHECK(report.mae == doctest::Approx(0.0));
  CHECK(report.rmse == doctest::Approx(0.0));
  CHECK(report.reach_error_rate == 0.0);
  CHECK(report.coverage_rate == 0.0);
  CHECK(report.l1_max == doctest::Approx(0.0));
  CHECK(report.time_per_query_us >= 0);
  CHECK(report.rows.size() == report.n_queries);
}

TEST_CASE("MAE is at most RMSE and partial budgets stay sane") {
  Hypergraph h = random_hypergraph(40, 80, 2, 6, 67);
  AssignmentConfig cfg;
  cfg.budget_q = 60;
  cfg.d_min = 4;
  cfg.seed = 3;
  Oracle o = build_oracle(h, cfg, 4);
  auto [cc, ledger] = find_connected_components(h, 4);
  AdjacencyCache cache(h);
  QueryBatch batch = sample_queries(h, cc, 40, 0.3, 4);
  EvalReport report = evaluate(o, h, batch, cache);
  if (report.n_scored > 0) {
    CHECK(report.mae <= report.rmse + 1e-12);
    CHECK(report.l1_p50 <= report.l1_p90 + 1e-12);
    CHECK(report.l1_p90 <= report.l1_max + 1e-12);
  }
  CHECK(report.coverage_rate >= 0);
  CHECK(report.reach_error_rate >= 0);
}

TEST_CASE("empty batches produce NaN markers") {
  Hypergraph h = test::toy();
  Oracle o = build_oracle(h, full_budget(2), 3);
  AdjacencyCache cache(h);
  EvalReport report = evaluate(o, h, QueryBatch{}, cache);
  CHECK(report.n_queries == 0);
  CHECK(std::isnan(report.mae));
  CHECK(std::isnan(report.rmse));
}

TEST_CASE("single mismatched pair arithmetic") {
  // true 2 vs estimate 1.165: MAE = RMSE = 0.835
  Hypergraph h = test::toy();
  Oracle o = build_oracle(h, full_budget(4), 4);
  AdjacencyCache cache(h);
  QueryBatch batch;
  batch.queries.push_back({QueryKind::HH, 1, 3, 2});
  EvalReport report = evaluate(o, h, batch, cache);
  CHECK(report.rows[0].truth == doctest::Approx(2));
  CHECK(report.mae == doctest::Approx(2 - 7.0 / 6.0));
  CHECK(report.rmse == doctest::Approx(2 - 7.0 / 6.0));
}

TEST_CASE("s-closeness on the toy level-2 path e2-e3-e4") {
  Hypergraph h = test::toy();
  auto [cc, ledger] = find_connected_components(h, 3);
  AdjacencyCache cache(h);
  CHECK(*s_closeness_exact(h, cache, cc, 2, 2) == doctest::Approx(1.0));
  CHECK(*s_closeness_exact(h, cache, cc, 1, 2) == doctest::Approx(1.5));
  CHECK(*s_closeness_exact(h, cache, cc, 3, 2) == doctest::Approx(1.5));
  CHECK_FALSE(s_closeness_exact(h, cache, cc, 0, 2).has_value());  // singleton
  CHECK_FALSE(s_closeness_exact(h, cache, cc, 0, 3).has_value());  // absent

  // estimates from a saturated oracle agree exactly
  Oracle o = build_oracle(h, full_budget(2), 3);
  for (EdgeId e = 1; e <= 3; ++e) {
    CHECK(*s_closeness_estimated(o, cc, e, 2) ==
          doctest::Approx(*s_closeness_exact(h, cache, cc, e, 2)));
  }

  // closeness of every member lies in [1, |c|-1]
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (auto c = s_closeness_exact(h, cache, cc, e, 1)) {
      CHECK(*c >= 1.0);
      CHECK(*c <= 4.0);
    }
  }
}

TEST_CASE("vertex closeness takes the max over containing hyperedges") {
  Hypergraph h = test::toy();
  auto [cc, ledger] = find_connected_components(h, 3);
  AdjacencyCache cache(h);
  // vertex "4" (id 3) sits in e2, e3, e4 with closeness 1.5, 1.0, 1.5
  CHECK(*vertex_s_closeness_exact(h, cache, cc, 3, 2) == doctest::Approx(1.5));
  // vertex "1" (id 0) only sits in e1, a level-2 singleton
  CHECK_FALSE(vertex_s_closeness_exact(h, cache, cc, 0, 2).has_value());
  // the max dominates each aggregated member value
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    auto vc = vertex_s_closeness_exact(h, cache, cc, v, 2);
    for (EdgeId e : h.edges_of(v)) {
      if (auto c = s_closeness_exact(h, cache, cc, e, 2)) {
        REQUIRE(vc.has_value());
        CHECK(*vc >= *c);
      }
    }
  }
  Oracle o = build_oracle(h, full_budget(2), 3);
  CHECK(*vertex_s_closeness_estimated(o, h, cc, 3, 2) == doctest::Approx(1.5));
}

TEST_CASE("MAPE and LAR formulas") {
  auto same = mape_lar({1, 2, 3}, {1, 2, 3});
  CHECK(same.mape == 0.0);
  CHECK(same.lar == 0.0);
  CHECK(same.n_excluded == 0);

  auto one = mape_lar({2}, {1});
  CHECK(one.mape == doctest::Approx(1.0));
  CHECK(one.lar == doctest::Approx(std::log(2.0) * std::log(2.0)));

  auto zero_truth = mape_lar({2, 3}, {0, 3});
  CHECK(zero_truth.n_excluded == 1);
  CHECK(zero_truth.mape == doctest::Approx(0.0));

  // LAR is a sum, not a mean
  auto two = mape_lar({2, 2}, {1, 1});
  CHECK(two.lar == doctest::Approx(2 * std::log(2.0) * std::log(2.0)));
  CHECK_THROWS_AS(mape_lar({1}, {1, 2}), std::invalid_argument);
}

TEST_CASE("average precision at k") {
  std::vector<RankedNeighbor> truth{{0, 1}, {1, 2}, {2, 3}};
  std::vector<RankedNeighbor> same = truth;
  CHECK(avep_at_k(same, truth, 3) == doctest::Approx(1.0));
  std::vector<RankedNeighbor> disjoint{{7, 1}, {8, 2}, {9, 3}};
  CHECK(avep_at_k(disjoint, truth, 3) == doctest::Approx(0.0));
  // est = [a, x, b], true top-2 = {a, b}: AveP = (1/1)/2 = 0.5
  std::vector<RankedNeighbor> est{{0, 1}, {9, 1.5}, {1, 2}};
  CHECK(avep_at_k(est, truth, 2) == doctest::Approx(0.5));
  // boundary ties in the exact ranking are all acceptable
  std::vector<RankedNeighbor> tied{{0, 1}, {1, 2}, {2, 2}};
  std::vector<RankedNeighbor> est2{{0, 1}, {2, 2}};
  CHECK(avep_at_k(est2, tied, 2) == doctest::Approx(1.0));
}

TEST_CASE("generator respects bounds and seeds") {
  Hypergraph a = random_hypergraph(30, 50, 2, 6, 5);
  Hypergraph b = random_hypergraph(30, 50, 2, 6, 5);
  Hypergraph c = random_hypergraph(30, 50, 2, 6, 6);
  CHECK(a.num_edges() == 50);
  for (EdgeId e = 0; e < a.num_edges(); ++e) {
    CHECK(a.edge_size(e) >= 2);
    CHECK(a.edge_size(e) <= 6);
    CHECK(std::equal(a.edge(e).begin(), a.edge(e).end(), b.edge(e).begin()));
  }
  bool differs = false;
  for (EdgeId e = 0; e < a.num_edges() && !differs; ++e) {
    differs = !std::equal(a.edge(e).begin(), a.edge(e).end(), c.edge(e).begin(),
                          c.edge(e).end());
  }
  CHECK(differs);

  Hypergraph p = powerlaw_hypergraph(100, 200, 2.0, 2, 10, 11);
  CHECK(p.num_edges() == 200);
  std::size_t small = 0;
  for (EdgeId e = 0; e < p.num_edges(); ++e) {
    CHECK(p.edge_size(e) >= 2);
    CHECK(p.edge_size(e) <= 10);
    if (p.edge_size(e) <= 3) ++small;
  }
  CHECK(small > 100);  // heavy head of the size distribution
  CHECK_THROWS_AS(random_hypergraph(4, 5, 2, 9, 1), std::invalid_argument);
}
