#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "hyped/hypergraph.hpp"

namespace hyped {

inline std::uint64_t pair_key(EdgeId a, EdgeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

// Per-s partition of the hyperedges with |e| >= s into connected components.
// Component ids are dense per level, assigned in order of first appearance
// over ascending hyperedge id.
struct SComponents {
  std::uint32_t s_max = 0;
  // comp_of[s-1][e] = component id at level s, kNone when |e| < s
  std::vector<std::vector<std::uint32_t>> comp_of;
  // comp_size[s-1][cid] = number of member hyperedges
  std::vector<std::vector<std::uint32_t>> comp_size;
  // comp_vertices[s-1][cid] = number of distinct vertices across members
  std::vector<std::vector<std::uint32_t>> comp_vertices;

  std::uint32_t component_of(std::uint32_t s, EdgeId e) const {
    return comp_of[s - 1][e];
  }
  std::uint32_t num_components(std::uint32_t s) const {
    return static_cast<std::uint32_t>(comp_size[s - 1].size());
  }
  // Member lists at level s, indexed by component id, members ascending.
  std::vector<std::vector<EdgeId>> members(std::uint32_t s) const;
};

// OP: known pairwise overlap counts (possibly partial until resolved);
// CP: pairs known s-connected whose overlap was never computed.
struct OverlapLedger {
  std::unordered_map<std::uint64_t, std::uint32_t> op;
  std::unordered_set<std::uint64_t> cp;
  std::uint64_t overlap_increments = 0;  // instrumentation
  bool resolved = false;                 // true once CP overlaps were computed
};

// Alg-style stage-wise computation: s from s_max down to 1, each stage seeded
// with the (s+1)-level components, dynamic inverted index, partial-overlap
// counting skipped for pairs already known co-component.
std::pair<SComponents, OverlapLedger> find_connected_components(
    const Hypergraph& h, std::uint32_t s_max);

// Baseline: build the full weighted line graph once, then union-find per s.
SComponents baseline_cc_linegraph(const Hypergraph& h, std::uint32_t s_max,
                                  std::uint64_t* overlap_increments = nullptr);

// Baseline: per-s fresh inverted index + union-find, no sharing across levels.
SComponents baseline_cc_independent(const Hypergraph& h, std::uint32_t s_max,
                                    std::uint64_t* overlap_increments = nullptr);

// Symmetric s-adjacency lists (sorted ascending).
struct SAdjacency {
  std::uint32_t s = 0;
  std::vector<std::vector<EdgeId>> adj;

  std::span<const EdgeId> neighbors(EdgeId e) const { return adj[e]; }
};

// Derives the s-adjacency from the ledger: OP entries with count >= s are
// adjacent; CP pairs get their true overlap computed once and cached into OP.
SAdjacency s_adjacency(const Hypergraph& h, OverlapLedger& ledger,
                       std::uint32_t s);

// Lazily materializes per-s adjacency, sharing one ledger. The ledger is
// built over the full size range so any s is answerable.
class AdjacencyCache {
 public:
  explicit AdjacencyCache(const Hypergraph& h);

  const Hypergraph& hypergraph() const { return h_; }
  const SAdjacency& at(std::uint32_t s) const;
  const SComponents& components() const { return cc_; }

 private:
  const Hypergraph& h_;
  SComponents cc_;
  mutable OverlapLedger ledger_;
  mutable std::vector<std::unique_ptr<SAdjacency>> cache_;
};

}  // namespace hyped
