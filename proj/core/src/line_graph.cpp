#include "hyped/line_graph.hpp"

#include <algorithm>
#include <deque>

namespace hyped {

LineGraph build_line_graph(const Hypergraph& h, std::size_t edge_budget) {
  LineGraph lg;
  lg.n_nodes = h.num_edges();
  std::vector<std::uint32_t> counts(h.num_edges(), 0);
  std::vector<EdgeId> seen;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    seen.clear();
    for (VertexId v : h.edge(e)) {
      for (EdgeId f : h.edges_of(v)) {
        if (f <= e) continue;
        if (counts[f]++ == 0) seen.push_back(f);
      }
    }
    std::sort(seen.begin(), seen.end());
    for (EdgeId f : seen) {
      if (lg.edges.size() >= edge_budget) {
        throw std::runtime_error("line graph exceeds the edge budget of " +
                                 std::to_string(edge_budget));
      }
      lg.edges.push_back({e, f, counts[f]});
      counts[f] = 0;
    }
  }
  return lg;
}

LineGraph s_line_graph(const LineGraph& lg, std::uint32_t s) {
  LineGraph out;
  out.n_nodes = lg.n_nodes;
  for (const auto& edge : lg.edges) {
    if (edge.weight >= s) out.edges.push_back(edge);
  }
  return out;
}

AugmentedLineGraph build_augmented_line_graph(const Hypergraph& h,
                                              std::size_t edge_budget) {
  AugmentedLineGraph out;
  out.n_hyperedge_nodes = h.num_edges();
  out.n_nodes = h.num_edges() + h.num_vertices();
  out.weighted_edges = build_line_graph(h, edge_budget).edges;
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    for (EdgeId e : h.edges_of(v)) {
      out.membership_edges.emplace_back(h.num_edges() + v, e);
    }
  }
  return out;
}

Dist exact_s_distance(const Hypergraph& h, const SAdjacency& adj, EdgeId e,
                      EdgeId f, std::uint32_t s) {
  if (e >= h.num_edges() || f >= h.num_edges()) {
    throw std::invalid_argument("invalid hyperedge id");
  }
  if (e == f) return 0;
  if (h.edge_size(e) < s || h.edge_size(f) < s) return kInfDist;

  // bidirectional BFS, expanding the smaller frontier
  std::vector<Dist> dist_fwd(h.num_edges(), kInfDist);
  std::vector<Dist> dist_bwd(h.num_edges(), kInfDist);
  std::vector<EdgeId> frontier_fwd{e}, frontier_bwd{f}, next;
  dist_fwd[e] = 0;
  dist_bwd[f] = 0;
  Dist depth_fwd = 0, depth_bwd = 0;
  Dist best = kInfDist;

  while (!frontier_fwd.empty() && !frontier_bwd.empty()) {
    bool forward = frontier_fwd.size() <= frontier_bwd.size();
    auto& frontier = forward ? frontier_fwd : frontier_bwd;
    auto& dist = forward ? dist_fwd : dist_bwd;
    auto& other = forward ? dist_bwd : dist_fwd;
    Dist& depth = forward ? depth_fwd : depth_bwd;

    // stop once the frontiers cannot improve on a found meeting point
    if (best != kInfDist && depth_fwd + depth_bwd + 1 >= best) break;

    next.clear();
    for (EdgeId u : frontier) {
      for (EdgeId w : adj.neighbors(u)) {
        if (dist[w] != kInfDist) continue;
        dist[w] = depth + 1;
        if (other[w] != kInfDist) {
          best = std::min<Dist>(best, dist[w] + other[w]);
        }
        next.push_back(w);
      }
    }
    frontier.swap(next);
    ++depth;
  }
  return best;
}

std::map<std::uint32_t, Dist> exact_profile(const Hypergraph& h,
                                            const AdjacencyCache& cache,
                                            EdgeId e, EdgeId f) {
  std::map<std::uint32_t, Dist> profile;
  std::uint32_t s_top = std::min(h.edge_size(e), h.edge_size(f));
  for (std::uint32_t s = 1; s <= s_top; ++s) {
    profile[s] = exact_s_distance(h, cache.at(s), e, f, s);
  }
  return profile;
}

std::vector<Dist> bfs_distances(const SAdjacency& adj, EdgeId source) {
  std::vector<Dist> dist(adj.adj.size(), kInfDist);
  std::deque<EdgeId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    EdgeId u = queue.front();
    queue.pop_front();
    for (EdgeId w : adj.neighbors(u)) {
      if (dist[w] == kInfDist) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace hyped
