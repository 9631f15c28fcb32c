#include "hyped/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace hyped {

Hypergraph Hypergraph::from_edges(std::vector<std::vector<VertexId>> edges,
                                  std::size_t n_vertices,
                                  std::vector<std::string> vertex_tokens) {
  Hypergraph h;
  h.n_vertices_ = n_vertices;
  h.vertex_tokens_ = std::move(vertex_tokens);
  for (std::size_t i = 0; i < h.vertex_tokens_.size(); ++i) {
    h.token_to_id_.emplace(h.vertex_tokens_[i], static_cast<VertexId>(i));
  }
  h.edge_off_.reserve(edges.size() + 1);
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw std::invalid_argument("hyperedge contains duplicate vertex ids");
    }
    if (e.size() < 2) {
      throw std::invalid_argument("hyperedge cardinality must be >= 2");
    }
    for (VertexId v : e) {
      if (v >= n_vertices) throw std::invalid_argument("vertex id out of range");
    }
    h.edge_vertices_.insert(h.edge_vertices_.end(), e.begin(), e.end());
    h.edge_off_.push_back(h.edge_vertices_.size());
  }
  h.build_indices();
  return h;
}

void Hypergraph::build_indices() {
  const std::size_t m = num_edges();
  max_edge_size_ = 0;
  std::vector<std::size_t> deg(n_vertices_, 0);
  for (EdgeId e = 0; e < m; ++e) {
    max_edge_size_ = std::max(max_edge_size_, edge_size(e));
    for (VertexId v : edge(e)) ++deg[v];
  }
  inc_off_.assign(n_vertices_ + 1, 0);
  for (std::size_t v = 0; v < n_vertices_; ++v) inc_off_[v + 1] = inc_off_[v] + deg[v];
  inc_edges_.resize(inc_off_.back());
  std::vector<std::size_t> cursor(inc_off_.begin(), inc_off_.end() - 1);
  for (EdgeId e = 0; e < m; ++e) {  // ascending e keeps posting lists sorted
    for (VertexId v : edge(e)) inc_edges_[cursor[v]++] = e;
  }

  edges_by_size_.resize(m);
  for (EdgeId e = 0; e < m; ++e) edges_by_size_[e] = e;
  std::stable_sort(edges_by_size_.begin(), edges_by_size_.end(),
                   [this](EdgeId a, EdgeId b) { return edge_size(a) > edge_size(b); });
  size_rank_off_.assign(max_edge_size_ + 2, 0);
  for (std::size_t i = 0; i < m; ++i) {
    // after the loop, size_rank_off_[s] = number of edges with size >= s
    ++size_rank_off_[edge_size(edges_by_size_[i])];
  }
  for (std::uint32_t s = max_edge_size_; s > 0; --s) {
    size_rank_off_[s] += size_rank_off_[s + 1];
  }
  size_rank_off_[0] = m;
}

std::uint32_t Hypergraph::overlap(EdgeId e, EdgeId f) const {
  auto a = edge(e), b = edge(f);
  std::uint32_t n = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (a[i] > b[j]) ++j;
    else { ++n; ++i; ++j; }
  }
  return n;
}

bool Hypergraph::edge_contains(EdgeId e, VertexId v) const {
  auto vs = edge(e);
  return std::binary_search(vs.begin(), vs.end(), v);
}

std::vector<EdgeId> Hypergraph::s_neighbors(EdgeId e, std::uint32_t s) const {
  if (e >= num_edges()) throw std::invalid_argument("invalid hyperedge id");
  std::vector<std::uint32_t> counts(num_edges(), 0);
  std::vector<EdgeId> touched;
  for (VertexId v : edge(e)) {
    for (EdgeId f : edges_of(v)) {
      if (f == e) continue;
      if (counts[f]++ == 0) touched.push_back(f);
    }
  }
  std::vector<EdgeId> out;
  for (EdgeId f : touched) {
    if (counts[f] >= s) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint32_t Hypergraph::s_degree(EdgeId e, std::uint32_t s) const {
  return static_cast<std::uint32_t>(s_neighbors(e, s).size());
}

std::span<const EdgeId> Hypergraph::edges_with_size_at_least(std::uint32_t i) const {
  if (i > max_edge_size_) return {};
  return {edges_by_size_.data(), size_rank_off_[i]};
}

VertexId Hypergraph::vertex_id(const std::string& token) const {
  auto it = token_to_id_.find(token);
  return it == token_to_id_.end() ? kNone : it->second;
}

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == ',' || c == '\r') {
      if (!cur.empty()) { out.push_back(std::move(cur)); cur.clear(); }
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

}  // namespace

Hypergraph load_hypergraph(const std::filesystem::path& path,
                           const LoadOptions& opts, LoadReport* report) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open hypergraph file: " + path.string());

  std::vector<std::string> tokens_by_id;
  std::unordered_map<std::string, VertexId> token_to_id;
  std::vector<std::vector<VertexId>> edges;
  std::map<std::vector<VertexId>, std::size_t> seen;
  std::size_t duplicates = 0;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto toks = split_tokens(line);
    if (toks.empty()) continue;
    std::vector<VertexId> edge;
    for (auto& t : toks) {
      auto [it, inserted] = token_to_id.emplace(t, static_cast<VertexId>(tokens_by_id.size()));
      if (inserted) tokens_by_id.push_back(t);
      edge.push_back(it->second);
    }
    std::sort(edge.begin(), edge.end());
    edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
    if (edge.size() < 2) {
      throw ParseError(path.string() + ":" + std::to_string(lineno) +
                       ": hyperedge needs at least 2 distinct vertices");
    }
    if (opts.dedupe) {
      auto [it, inserted] = seen.emplace(edge, edges.size());
      if (!inserted) { ++duplicates; continue; }
    }
    edges.push_back(std::move(edge));
  }
  if (report) report->duplicate_edges = duplicates;
  std::size_t n_vertices = tokens_by_id.size();
  return Hypergraph::from_edges(std::move(edges), n_vertices,
                                std::move(tokens_by_id));
}

std::unordered_map<std::string, std::string> load_labels(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open label file: " + path.string());
  std::unordered_map<std::string, std::string> labels;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError(path.string() + ":" + std::to_string(lineno) +
                       ": expected <token> TAB <label>");
    }
    labels[line.substr(0, tab)] = line.substr(tab + 1);
  }
  return labels;
}

}  // namespace hyped
