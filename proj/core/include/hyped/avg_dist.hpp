#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace hyped {

// One connected unlabeled simple graph on n nodes.
struct Topology {
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  double mean_pairwise_distance = 0.0;
};

// All connected unlabeled simple graphs on n nodes, n in [2, 5].
// Deduplicated up to isomorphism by brute-force canonicalization.
std::vector<Topology> enumerate_connected_topologies(std::uint32_t n);

// Expected average pairwise distance over the topologies of a given size:
// the unweighted mean of the per-topology means. Supported for i in [2, 5].
double approx_avg_dist(std::uint32_t i);

// Mean per (n, m): average of the per-topology means over the connected
// topologies with exactly m edges.
std::map<std::uint32_t, double> avg_dist_by_edge_count(std::uint32_t n);

inline constexpr std::uint32_t kMaxAvgDistSize = 5;

// avgD table keyed by component size, sizes [2, d_min].
struct AvgDistTable {
  std::uint32_t d_min = 0;
  std::vector<double> values;  // values[i - 2] for size i

  double at(std::uint32_t size) const { return values[size - 2]; }

  static AvgDistTable compute(std::uint32_t d_min);
};

}  // namespace hyped
