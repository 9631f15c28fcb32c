#pragma once

// Shared fixtures and independent reference implementations the tests
// compare against. The references are deliberately naive: quadratic overlap
// scans and textbook BFS, no shared state with the library code.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <vector>

#include "hyped/hypergraph.hpp"

namespace test {

using hyped::Dist;
using hyped::EdgeId;
using hyped::Hypergraph;
using hyped::kInfDist;
using hyped::kNone;
using hyped::VertexId;

// Five hyperedges over vertices 1..8 (dense ids 0..7 in first-seen order):
// {1,2} {2,3,4} {3,4,5} {4,5,6,7} {7,8}
inline Hypergraph toy() {
  return Hypergraph::from_edges(
      {{0, 1}, {1, 2, 3}, {2, 3, 4}, {3, 4, 5, 6}, {6, 7}}, 8);
}

inline std::uint32_t naive_overlap(const Hypergraph& h, EdgeId e, EdgeId f) {
  std::uint32_t n = 0;
  for (VertexId v : h.edge(e)) {
    if (std::find(h.edge(f).begin(), h.edge(f).end(), v) != h.edge(f).end()) {
      ++n;
    }
  }
  return n;
}

// Quadratic-scan s-adjacency lists over the edges with |e| >= s.
inline std::vector<std::vector<EdgeId>> naive_adjacency(const Hypergraph& h,
                                                        std::uint32_t s) {
  std::vector<std::vector<EdgeId>> adj(h.num_edges());
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (h.edge_size(e) < s) continue;
    for (EdgeId f = e + 1; f < h.num_edges(); ++f) {
      if (h.edge_size(f) < s || naive_overlap(h, e, f) < s) continue;
      adj[e].push_back(f);
      adj[f].push_back(e);
    }
  }
  return adj;
}

inline Dist naive_s_distance(const Hypergraph& h, EdgeId e, EdgeId f,
                             std::uint32_t s) {
  if (e == f) return 0;
  if (h.edge_size(e) < s || h.edge_size(f) < s) return kInfDist;
  auto adj = naive_adjacency(h, s);
  std::vector<Dist> dist(h.num_edges(), kInfDist);
  std::deque<EdgeId> queue{e};
  dist[e] = 0;
  while (!queue.empty()) {
    EdgeId u = queue.front();
    queue.pop_front();
    for (EdgeId w : adj[u]) {
      if (dist[w] == kInfDist) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist[f];
}

// Component ids at level s, normalized the same way the library does:
// dense, in order of first appearance over ascending edge id; kNone absent.
inline std::vector<std::uint32_t> naive_components(const Hypergraph& h,
                                                   std::uint32_t s) {
  auto adj = naive_adjacency(h, s);
  std::vector<std::uint32_t> comp(h.num_edges(), kNone);
  std::uint32_t next = 0;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (h.edge_size(e) < s || comp[e] != kNone) continue;
    std::deque<EdgeId> queue{e};
    comp[e] = next;
    while (!queue.empty()) {
      EdgeId u = queue.front();
      queue.pop_front();
      for (EdgeId w : adj[u]) {
        if (comp[w] == kNone) {
          comp[w] = next;
          queue.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

// Renames component ids to first-appearance order so two labelings of the
// same partition compare equal.
inline std::vector<std::uint32_t> normalize_partition(
    std::vector<std::uint32_t> comp) {
  std::vector<std::uint32_t> rename;
  for (auto& c : comp) {
    if (c == kNone) continue;
    auto it = std::find(rename.begin(), rename.end(), c);
    if (it == rename.end()) {
      rename.push_back(c);
      c = static_cast<std::uint32_t>(rename.size() - 1);
    } else {
      c = static_cast<std::uint32_t>(it - rename.begin());
    }
  }
  return comp;
}

}  // namespace test
