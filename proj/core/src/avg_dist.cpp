#include "hyped/avg_dist.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

namespace hyped {

namespace {

constexpr std::uint32_t kMaxNodes = 5;

// Adjacency-matrix bitmask over the C(n,2) vertex pairs in lexicographic
// order; pair_index(i, j) with i < j.
std::uint32_t pair_index(std::uint32_t n, std::uint32_t i, std::uint32_t j) {
  std::uint32_t idx = 0;
  for (std::uint32_t a = 0; a < i; ++a) idx += n - a - 1;
  return idx + (j - i - 1);
}

bool connected(std::uint32_t n, std::uint32_t mask) {
  std::uint32_t visited = 1, frontier = 1;  // start from node 0
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (!(frontier >> i & 1)) continue;
      for (std::uint32_t j = 0; j < n; ++j) {
        if (i == j) continue;
        std::uint32_t a = std::min(i, j), b = std::max(i, j);
        if (mask >> pair_index(n, a, b) & 1 && !(visited >> j & 1)) {
          next |= 1u << j;
        }
      }
    }
    visited |= next;
    frontier = next;
  }
  return visited == (1u << n) - 1;
}

std::uint32_t canonical_mask(std::uint32_t n, std::uint32_t mask) {
  std::array<std::uint32_t, kMaxNodes> perm{};
  std::iota(perm.begin(), perm.begin() + n, 0u);
  std::uint32_t best = ~0u;
  do {
    std::uint32_t relabeled = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = i + 1; j < n; ++j) {
        if (!(mask >> pair_index(n, i, j) & 1)) continue;
        std::uint32_t a = std::min(perm[i], perm[j]);
        std::uint32_t b = std::max(perm[i], perm[j]);
        relabeled |= 1u << pair_index(n, a, b);
      }
    }
    best = std::min(best, relabeled);
  } while (std::next_permutation(perm.begin(), perm.begin() + n));
  return best;
}

double mean_pairwise_distance(std::uint32_t n, std::uint32_t mask) {
  std::array<std::array<std::uint32_t, kMaxNodes>, kMaxNodes> d{};
  constexpr std::uint32_t inf = 100;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i == j) d[i][j] = 0;
      else if (mask >> pair_index(n, std::min(i, j), std::max(i, j)) & 1) d[i][j] = 1;
      else d[i][j] = inf;
    }
  }
  for (std::uint32_t k = 0; k < n; ++k) {
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) {
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  std::uint64_t sum = 0, pairs = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      sum += d[i][j];
      ++pairs;
    }
  }
  return static_cast<double>(sum) / static_cast<double>(pairs);
}

}  // namespace

std::vector<Topology> enumerate_connected_topologies(std::uint32_t n) {
  if (n < 2 || n > kMaxAvgDistSize) {
    throw std::invalid_argument(
        "topology enumeration supports sizes in [2, 5], got " + std::to_string(n));
  }
  std::uint32_t n_pairs = n * (n - 1) / 2;
  std::set<std::uint32_t> seen;
  std::vector<Topology> out;
  for (std::uint32_t mask = 0; mask < (1u << n_pairs); ++mask) {
    if (!connected(n, mask)) continue;
    if (!seen.insert(canonical_mask(n, mask)).second) continue;
    Topology t;
    t.n = n;
    t.m = static_cast<std::uint32_t>(std::popcount(mask));
    t.mean_pairwise_distance = mean_pairwise_distance(n, mask);
    out.push_back(t);
  }
  std::sort(out.begin(), out.end(), [](const Topology& a, const Topology& b) {
    return std::tie(a.m, a.mean_pairwise_distance) <
           std::tie(b.m, b.mean_pairwise_distance);
  });
  return out;
}

double approx_avg_dist(std::uint32_t i) {
  auto topologies = enumerate_connected_topologies(i);
  double sum = 0.0;
  for (const auto& t : topologies) sum += t.mean_pairwise_distance;
  return sum / static_cast<double>(topologies.size());
}

std::map<std::uint32_t, double> avg_dist_by_edge_count(std::uint32_t n) {
  std::map<std::uint32_t, std::pair<double, std::uint32_t>> acc;
  for (const auto& t : enumerate_connected_topologies(n)) {
    auto& [sum, count] = acc[t.m];
    sum += t.mean_pairwise_distance;
    ++count;
  }
  std::map<std::uint32_t, double> out;
  for (auto& [m, sc] : acc) out[m] = sc.first / sc.second;
  return out;
}

AvgDistTable AvgDistTable::compute(std::uint32_t d_min) {
  if (d_min < 2 || d_min > kMaxAvgDistSize) {
    throw std::invalid_argument("d_min must be in [2, 5]");
  }
  AvgDistTable table;
  table.d_min = d_min;
  for (std::uint32_t i = 2; i <= d_min; ++i) {
    table.values.push_back(approx_avg_dist(i));
  }
  return table;
}

}  // namespace hyped
