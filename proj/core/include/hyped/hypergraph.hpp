#pragma once

#include <cstdint>
#include <filesystem>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace hyped {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using Dist = std::uint32_t;

inline constexpr Dist kInfDist = std::numeric_limits<Dist>::max();
inline constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Hyperedges stored in CSR form, each edge a sorted set of vertex ids.
// The incidence index (vertex -> sorted edge ids) is the exact transpose.
// Immutable after construction.
class Hypergraph {
 public:
  Hypergraph() = default;

  // Edges may arrive unsorted; duplicates within an edge are rejected.
  static Hypergraph from_edges(std::vector<std::vector<VertexId>> edges,
                               std::size_t n_vertices,
                               std::vector<std::string> vertex_tokens = {});

  std::size_t num_vertices() const { return n_vertices_; }
  std::size_t num_edges() const { return edge_off_.empty() ? 0 : edge_off_.size() - 1; }

  std::span<const VertexId> edge(EdgeId e) const {
    return {edge_vertices_.data() + edge_off_[e], edge_off_[e + 1] - edge_off_[e]};
  }
  std::uint32_t edge_size(EdgeId e) const {
    return static_cast<std::uint32_t>(edge_off_[e + 1] - edge_off_[e]);
  }
  std::span<const EdgeId> edges_of(VertexId v) const {
    return {inc_edges_.data() + inc_off_[v], inc_off_[v + 1] - inc_off_[v]};
  }

  std::uint32_t max_edge_size() const { return max_edge_size_; }

  // Overlap |edge(e) ∩ edge(f)| via merge of the sorted vertex lists.
  std::uint32_t overlap(EdgeId e, EdgeId f) const;

  bool edge_contains(EdgeId e, VertexId v) const;

  // All f != e with |e ∩ f| >= s, via incidence-index counting.
  std::vector<EdgeId> s_neighbors(EdgeId e, std::uint32_t s) const;
  std::uint32_t s_degree(EdgeId e, std::uint32_t s) const;

  // Edges ordered by decreasing size; edges_with_size_at_least(i) is a prefix.
  std::span<const EdgeId> edges_with_size_at_least(std::uint32_t i) const;

  // Original string tokens (empty when built from numeric ids directly).
  const std::vector<std::string>& vertex_tokens() const { return vertex_tokens_; }
  // Maps a token back to its dense id; kNone if unknown.
  VertexId vertex_id(const std::string& token) const;

 private:
  void build_indices();

  std::size_t n_vertices_ = 0;
  std::vector<std::size_t> edge_off_{0};
  std::vector<VertexId> edge_vertices_;
  std::vector<std::size_t> inc_off_;
  std::vector<EdgeId> inc_edges_;
  std::uint32_t max_edge_size_ = 0;

  // size-descending order with per-threshold offsets: prefix [0, size_rank_off_[i])
  // holds the edges of size >= i.
  std::vector<EdgeId> edges_by_size_;
  std::vector<std::size_t> size_rank_off_;

  std::vector<std::string> vertex_tokens_;
  std::unordered_map<std::string, VertexId> token_to_id_;
};

struct LoadOptions {
  bool dedupe = false;
};

struct LoadReport {
  std::size_t duplicate_edges = 0;  // collapsed when dedupe, kept otherwise
};

// One hyperedge per line, tokens separated by whitespace or commas,
// '#' lines ignored. Tokens are mapped to dense ids in first-seen order.
Hypergraph load_hypergraph(const std::filesystem::path& path,
                           const LoadOptions& opts = {},
                           LoadReport* report = nullptr);

// TSV `<entity-token> TAB <label>` per line.
std::unordered_map<std::string, std::string> load_labels(
    const std::filesystem::path& path);

}  // namespace hyped
