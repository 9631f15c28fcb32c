#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hyped/connectivity.hpp"
#include "hyped/hypergraph.hpp"

namespace hyped {

// Weighted line graph: nodes are hyperedge ids, an edge per overlapping pair
// with weight |e ∩ f|. Edges stored once with e < f, sorted lexicographically.
struct LineGraph {
  struct Edge {
    EdgeId e;
    EdgeId f;
    std::uint32_t weight;
    auto operator<=>(const Edge&) const = default;
  };
  std::size_t n_nodes = 0;
  std::vector<Edge> edges;
};

enum class NodeKind : std::uint8_t { Hyperedge, Vertex };

// Line graph plus one node per hypergraph vertex and an unweighted membership
// edge per (vertex, containing hyperedge). Vertex nodes are numbered after
// the hyperedge nodes: node id |E| + v.
struct AugmentedLineGraph {
  std::size_t n_nodes = 0;
  std::size_t n_hyperedge_nodes = 0;
  std::vector<LineGraph::Edge> weighted_edges;                  // between hyperedge nodes
  std::vector<std::pair<std::size_t, EdgeId>> membership_edges;  // (vertex node, hyperedge)

  NodeKind kind(std::size_t node) const {
    return node < n_hyperedge_nodes ? NodeKind::Hyperedge : NodeKind::Vertex;
  }
};

// Refuses to materialize line graphs past this many edges unless overridden.
inline constexpr std::size_t kDefaultLineGraphEdgeBudget = 100'000'000;

LineGraph build_line_graph(const Hypergraph& h,
                           std::size_t edge_budget = kDefaultLineGraphEdgeBudget);

LineGraph s_line_graph(const LineGraph& lg, std::uint32_t s);

AugmentedLineGraph build_augmented_line_graph(
    const Hypergraph& h, std::size_t edge_budget = kDefaultLineGraphEdgeBudget);

// Exact s-distance via bidirectional BFS over the level-s adjacency.
// 0 for e == f; kInfDist when not s-connected or min(|e|,|f|) < s with e != f.
Dist exact_s_distance(const Hypergraph& h, const SAdjacency& adj, EdgeId e,
                      EdgeId f, std::uint32_t s);

// Exact per-s distances for s in [1, min(|e|,|f|)].
std::map<std::uint32_t, Dist> exact_profile(const Hypergraph& h,
                                            const AdjacencyCache& cache,
                                            EdgeId e, EdgeId f);

// Single-source BFS distances restricted to the level-s adjacency.
// Unreached edges get kInfDist.
std::vector<Dist> bfs_distances(const SAdjacency& adj, EdgeId source);

}  // namespace hyped
