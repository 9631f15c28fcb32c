#pragma once

#include <cstdint>

#include "hyped/hypergraph.hpp"

namespace hyped {

// Uniform random hypergraph: edge sizes uniform in [min_size, max_size],
// vertices of each edge sampled without replacement.
Hypergraph random_hypergraph(std::size_t n_vertices, std::size_t n_edges,
                             std::uint32_t min_size, std::uint32_t max_size,
                             std::uint64_t seed);

// Power-law edge sizes (P(k) ~ k^-exponent on [min_size, max_size]) with
// Zipf-skewed vertex popularity, so overlaps actually occur at scale.
Hypergraph powerlaw_hypergraph(std::size_t n_vertices, std::size_t n_edges,
                               double exponent, std::uint32_t min_size,
                               std::uint32_t max_size, std::uint64_t seed);

}  // namespace hyped
