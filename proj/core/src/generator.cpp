#include "hyped/generator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace hyped {

namespace {

std::vector<VertexId> sample_distinct(std::size_t n_vertices,
                                      std::uint32_t size,
                                      std::mt19937_64& rng) {
  std::uniform_int_distribution<VertexId> pick(
      0, static_cast<VertexId>(n_vertices - 1));
  std::unordered_set<VertexId> chosen;
  std::vector<VertexId> edge;
  while (edge.size() < size) {
    VertexId v = pick(rng);
    if (chosen.insert(v).second) edge.push_back(v);
  }
  return edge;
}

void check_args(std::size_t n_vertices, std::uint32_t min_size,
                std::uint32_t max_size) {
  if (min_size < 2 || max_size < min_size || max_size > n_vertices) {
    throw std::invalid_argument("generator: need 2 <= min_size <= max_size <= |V|");
  }
}

}  // namespace

Hypergraph random_hypergraph(std::size_t n_vertices, std::size_t n_edges,
                             std::uint32_t min_size, std::uint32_t max_size,
                             std::uint64_t seed) {
  check_args(n_vertices, min_size, max_size);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick_size(min_size, max_size);
  std::vector<std::vector<VertexId>> edges;
  edges.reserve(n_edges);
  for (std::size_t i = 0; i < n_edges; ++i) {
    edges.push_back(sample_distinct(n_vertices, pick_size(rng), rng));
  }
  return Hypergraph::from_edges(std::move(edges), n_vertices);
}

Hypergraph powerlaw_hypergraph(std::size_t n_vertices, std::size_t n_edges,
                               double exponent, std::uint32_t min_size,
                               std::uint32_t max_size, std::uint64_t seed) {
  check_args(n_vertices, min_size, max_size);
  std::mt19937_64 rng(seed);

  std::vector<double> size_weights;
  for (std::uint32_t k = min_size; k <= max_size; ++k) {
    size_weights.push_back(std::pow(static_cast<double>(k), -exponent));
  }
  std::discrete_distribution<std::uint32_t> pick_size(size_weights.begin(),
                                                      size_weights.end());

  // Zipf popularity over a seeded shuffle of the vertex ids.
  std::vector<VertexId> order(n_vertices);
  for (std::size_t v = 0; v < n_vertices; ++v) order[v] = static_cast<VertexId>(v);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<double> popularity(n_vertices);
  for (std::size_t r = 0; r < n_vertices; ++r) popularity[r] = 1.0 / (r + 1);
  std::discrete_distribution<std::size_t> pick_rank(popularity.begin(),
                                                    popularity.end());

  std::vector<std::vector<VertexId>> edges;
  edges.reserve(n_edges);
  for (std::size_t i = 0; i < n_edges; ++i) {
    std::uint32_t size = min_size + pick_size(rng);
    std::unordered_set<VertexId> chosen;
    std::vector<VertexId> edge;
    while (edge.size() < size) {
      VertexId v = order[pick_rank(rng)];
      if (chosen.insert(v).second) edge.push_back(v);
    }
    edges.push_back(std::move(edge));
  }
  return Hypergraph::from_edges(std::move(edges), n_vertices);
}

}  // namespace hyped
