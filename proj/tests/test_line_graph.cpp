#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "hyped/generator.hpp"
#include "hyped/line_graph.hpp"

using namespace hyped;

TEST_CASE("toy line graph edges and weights") {
  Hypergraph h = test::toy();
  LineGraph lg = build_line_graph(h);
  std::vector<LineGraph::Edge> want{
      {0, 1, 1}, {1, 2, 2}, {1, 3, 1}, {2, 3, 2}, {3, 4, 1}};
  CHECK(lg.n_nodes == 5);
  CHECK(lg.edges == want);

  LineGraph filtered = s_line_graph(lg, 2);
  std::vector<LineGraph::Edge> want2{{1, 2, 2}, {2, 3, 2}};
  CHECK(filtered.edges == want2);
  CHECK(s_line_graph(lg, 3).edges.empty());
}

TEST_CASE("augmented line graph adds vertex nodes and membership edges") {
  Hypergraph h = test::toy();
  AugmentedLineGraph alg = build_augmented_line_graph(h);
  CHECK(alg.n_hyperedge_nodes == 5);
  CHECK(alg.n_nodes == 13);
  CHECK(alg.weighted_edges.size() == 5);
  CHECK(alg.membership_edges.size() == 14);  // sum of the edge sizes
  CHECK(alg.kind(4) == NodeKind::Hyperedge);
  CHECK(alg.kind(5) == NodeKind::Vertex);
}

TEST_CASE("line graph edge budget is enforced") {
  Hypergraph h = test::toy();
  CHECK_THROWS_AS(build_line_graph(h, 2), std::runtime_error);
  CHECK_THROWS_AS(build_augmented_line_graph(h, 2), std::runtime_error);
}

TEST_CASE("exact distances on the toy fixture") {
  Hypergraph h = test::toy();
  AdjacencyCache cache(h);
  CHECK(exact_s_distance(h, cache.at(1), 0, 4, 1) == 3);
  CHECK(exact_s_distance(h, cache.at(2), 1, 3, 2) == 2);
  CHECK(exact_s_distance(h, cache.at(3), 1, 3, 3) == kInfDist);
  CHECK(exact_s_distance(h, cache.at(1), 2, 2, 1) == 0);
  // |e1| = 2 < 3: absent at level 3
  CHECK(exact_s_distance(h, cache.at(3), 0, 1, 3) == kInfDist);
}

TEST_CASE("exact profile covers s in [1, min edge size]") {
  Hypergraph h = test::toy();
  AdjacencyCache cache(h);
  auto profile = exact_profile(h, cache, 1, 3);
  REQUIRE(profile.size() == 3);
  CHECK(profile.at(1) == 1);
  CHECK(profile.at(2) == 2);
  CHECK(profile.at(3) == kInfDist);
  auto self = exact_profile(h, cache, 2, 2);
  for (auto [s, d] : self) CHECK(d == 0);
}

TEST_CASE("bidirectional BFS equals naive BFS on random hypergraphs") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 8; ++trial) {
    Hypergraph h = random_hypergraph(20, 30, 2, 6, rng());
    AdjacencyCache cache(h);
    for (std::uint32_t s = 1; s <= 4; ++s) {
      for (EdgeId e = 0; e < h.num_edges(); e += 3) {
        for (EdgeId f = 0; f < h.num_edges(); f += 2) {
          CHECK(exact_s_distance(h, cache.at(s), e, f, s) ==
                test::naive_s_distance(h, e, f, s));
        }
      }
    }
  }
}

TEST_CASE("bfs_distances matches single-pair queries") {
  Hypergraph h = random_hypergraph(20, 30, 2, 5, 31);
  AdjacencyCache cache(h);
  auto dist = bfs_distances(cache.at(2), 0);
  for (EdgeId f = 0; f < h.num_edges(); ++f) {
    CHECK(dist[f] == exact_s_distance(h, cache.at(2), 0, f, 2));
  }
}

TEST_CASE("hyperedge distances satisfy the triangle inequality") {
  Hypergraph h = random_hypergraph(15, 20, 2, 5, 37);
  AdjacencyCache cache(h);
  for (std::uint32_t s = 1; s <= 3; ++s) {
    std::vector<std::vector<Dist>> d;
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      d.push_back(bfs_distances(cache.at(s), e));
    }
    for (EdgeId a = 0; a < h.num_edges(); ++a) {
      for (EdgeId b = 0; b < h.num_edges(); ++b) {
        for (EdgeId c = 0; c < h.num_edges(); ++c) {
          if (d[a][b] == kInfDist || d[b][c] == kInfDist) continue;
          CHECK(d[a][c] <= d[a][b] + d[b][c]);
        }
      }
    }
  }
}
