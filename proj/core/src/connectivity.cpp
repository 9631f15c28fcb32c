#include "hyped/connectivity.hpp"

#include <algorithm>

#include "hyped/union_find.hpp"

namespace hyped {

std::vector<std::vector<EdgeId>> SComponents::members(std::uint32_t s) const {
  std::vector<std::vector<EdgeId>> out(num_components(s));
  const auto& level = comp_of[s - 1];
  for (EdgeId e = 0; e < level.size(); ++e) {
    if (level[e] != kNone) out[level[e]].push_back(e);
  }
  return out;
}

namespace {

// Remaps union-find roots to dense component ids (order of first appearance
// over ascending edge id) and fills sizes and distinct-vertex counts.
void finalize_level(const Hypergraph& h, UnionFind& uf,
                    const std::vector<EdgeId>& level_edges, std::uint32_t s,
                    SComponents& cc) {
  auto& comp_of = cc.comp_of[s - 1];
  comp_of.assign(h.num_edges(), kNone);
  std::vector<std::uint32_t> root_to_cid(h.num_edges(), kNone);
  std::uint32_t next = 0;
  for (EdgeId e : level_edges) {
    std::uint32_t root = uf.find(e);
    if (root_to_cid[root] == kNone) root_to_cid[root] = next++;
    comp_of[e] = root_to_cid[root];
  }
  auto& sizes = cc.comp_size[s - 1];
  sizes.assign(next, 0);
  for (EdgeId e : level_edges) ++sizes[comp_of[e]];

  auto& nverts = cc.comp_vertices[s - 1];
  nverts.assign(next, 0);
  std::vector<std::uint32_t> stamp(h.num_vertices(), kNone);
  for (EdgeId e : level_edges) {
    std::uint32_t cid = comp_of[e];
    for (VertexId v : h.edge(e)) {
      if (stamp[v] != cid) {
        stamp[v] = cid;
        ++nverts[cid];
      }
    }
  }
}

std::vector<EdgeId> level_edges_ascending(const Hypergraph& h, std::uint32_t s) {
  auto span = h.edges_with_size_at_least(s);
  std::vector<EdgeId> out(span.begin(), span.end());
  std::sort(out.begin(), out.end());
  return out;
}

SComponents make_empty(const Hypergraph& h, std::uint32_t s_max) {
  SComponents cc;
  cc.s_max = s_max;
  cc.comp_of.resize(s_max);
  cc.comp_size.resize(s_max);
  cc.comp_vertices.resize(s_max);
  return cc;
}

}  // namespace

std::pair<SComponents, OverlapLedger> find_connected_components(
    const Hypergraph& h, std::uint32_t s_max) {
  if (s_max < 1) throw std::invalid_argument("s_max must be >= 1");
  SComponents cc = make_empty(h, s_max);
  OverlapLedger ledger;

  std::vector<std::vector<EdgeId>> index(h.num_vertices());
  std::unordered_map<std::uint64_t, std::uint32_t> ov;
  std::size_t indexed = 0;

  for (std::uint32_t s = s_max; s >= 1; --s) {
    auto level_edges = level_edges_ascending(h, s);

    UnionFind uf(h.num_edges());
    if (s < s_max) {
      // seed with the (s+1)-level components
      const auto& prev = cc.comp_of[s];
      std::vector<EdgeId> first_of(cc.comp_size[s].size(), kNone);
      for (EdgeId e : level_edges) {
        std::uint32_t cid = prev[e];
        if (cid == kNone) continue;
        if (first_of[cid] == kNone) first_of[cid] = e;
        else uf.unite(first_of[cid], e);
      }
    }

    // extend the dynamic inverted index with the edges entering at this stage;
    // edges_with_size_at_least spans are nested prefixes of one ordering, so
    // the new edges are exactly all[indexed..)
    auto all = h.edges_with_size_at_least(s);
    std::vector<VertexId> touched;
    for (; indexed < all.size(); ++indexed) {
      for (VertexId v : h.edge(all[indexed])) {
        index[v].push_back(all[indexed]);
        touched.push_back(v);
      }
    }
    for (VertexId v : touched) std::sort(index[v].begin(), index[v].end());

    ov.clear();
    for (VertexId v = 0; v < h.num_vertices(); ++v) {
      const auto& list = index[v];
      for (std::size_t i = 0; i + 1 < list.size(); ++i) {
        for (std::size_t j = i + 1; j < list.size(); ++j) {
          EdgeId e1 = list[i], e2 = list[j];
          std::uint64_t key = pair_key(e1, e2);
          if (uf.same(e1, e2)) {
            ledger.cp.insert(key);
          } else {
            std::uint32_t o = ++ov[key];
            ++ledger.overlap_increments;
            if (o >= s) {
              ledger.op[key] = o;
              uf.unite(e1, e2);
            }
          }
        }
      }
    }

    finalize_level(h, uf, level_edges, s, cc);
  }
  return {std::move(cc), std::move(ledger)};
}

SComponents baseline_cc_independent(const Hypergraph& h, std::uint32_t s_max,
                                    std::uint64_t* overlap_increments) {
  if (s_max < 1) throw std::invalid_argument("s_max must be >= 1");
  SComponents cc = make_empty(h, s_max);
  std::uint64_t increments = 0;
  for (std::uint32_t s = 1; s <= s_max; ++s) {
    auto level_edges = level_edges_ascending(h, s);
    std::vector<std::vector<EdgeId>> index(h.num_vertices());
    for (EdgeId e : level_edges) {
      for (VertexId v : h.edge(e)) index[v].push_back(e);
    }
    UnionFind uf(h.num_edges());
    std::unordered_map<std::uint64_t, std::uint32_t> ov;
    for (VertexId v = 0; v < h.num_vertices(); ++v) {
      const auto& list = index[v];
      for (std::size_t i = 0; i + 1 < list.size(); ++i) {
        for (std::size_t j = i + 1; j < list.size(); ++j) {
          if (uf.same(list[i], list[j])) continue;
          std::uint32_t o = ++ov[pair_key(list[i], list[j])];
          ++increments;
          if (o >= s) uf.unite(list[i], list[j]);
        }
      }
    }
    finalize_level(h, uf, level_edges, s, cc);
  }
  if (overlap_increments) *overlap_increments = increments;
  return cc;
}

SComponents baseline_cc_linegraph(const Hypergraph& h, std::uint32_t s_max,
                                  std::uint64_t* overlap_increments) {
  if (s_max < 1) throw std::invalid_argument("s_max must be >= 1");
  // full weighted line graph via incidence counting
  std::uint64_t increments = 0;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> weighted;
  {
    std::vector<std::uint32_t> counts(h.num_edges(), 0);
    std::vector<EdgeId> seen;
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      seen.clear();
      for (VertexId v : h.edge(e)) {
        for (EdgeId f : h.edges_of(v)) {
          if (f <= e) continue;
          if (counts[f]++ == 0) seen.push_back(f);
          ++increments;
        }
      }
      for (EdgeId f : seen) {
        weighted.emplace_back(pair_key(e, f), counts[f]);
        counts[f] = 0;
      }
    }
  }
  SComponents cc = make_empty(h, s_max);
  for (std::uint32_t s = 1; s <= s_max; ++s) {
    UnionFind uf(h.num_edges());
    for (auto [key, w] : weighted) {
      if (w >= s) uf.unite(static_cast<EdgeId>(key >> 32),
                           static_cast<EdgeId>(key & 0xffffffffu));
    }
    auto level_edges = level_edges_ascending(h, s);
    finalize_level(h, uf, level_edges, s, cc);
  }
  if (overlap_increments) *overlap_increments = increments;
  return cc;
}

SAdjacency s_adjacency(const Hypergraph& h, OverlapLedger& ledger,
                       std::uint32_t s) {
  if (s < 1) throw std::invalid_argument("s must be >= 1");
  if (!ledger.resolved) {
    for (std::uint64_t key : ledger.cp) {
      EdgeId a = static_cast<EdgeId>(key >> 32);
      EdgeId b = static_cast<EdgeId>(key & 0xffffffffu);
      ledger.op[key] = h.overlap(a, b);
    }
    ledger.cp.clear();
    ledger.resolved = true;
  }
  SAdjacency out;
  out.s = s;
  out.adj.resize(h.num_edges());
  for (auto [key, o] : ledger.op) {
    if (o < s) continue;
    EdgeId a = static_cast<EdgeId>(key >> 32);
    EdgeId b = static_cast<EdgeId>(key & 0xffffffffu);
    out.adj[a].push_back(b);
    out.adj[b].push_back(a);
  }
  for (auto& list : out.adj) std::sort(list.begin(), list.end());
  return out;
}

AdjacencyCache::AdjacencyCache(const Hypergraph& h) : h_(h) {
  std::uint32_t s_max = std::max<std::uint32_t>(1, h.max_edge_size());
  auto [cc, ledger] = find_connected_components(h, s_max);
  cc_ = std::move(cc);
  ledger_ = std::move(ledger);
  cache_.resize(s_max + 2);
}

const SAdjacency& AdjacencyCache::at(std::uint32_t s) const {
  if (s < 1) throw std::invalid_argument("s must be >= 1");
  std::uint32_t slot = std::min<std::uint32_t>(
      s, static_cast<std::uint32_t>(cache_.size() - 1));
  if (!cache_[slot]) {
    auto adj = std::make_unique<SAdjacency>();
    if (slot <= h_.max_edge_size()) {
      *adj = s_adjacency(h_, ledger_, slot);
    } else {
      adj->s = slot;
      adj->adj.resize(h_.num_edges());
    }
    cache_[slot] = std::move(adj);
  }
  return *cache_[slot];
}

}  // namespace hyped
