#include "hyped/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include "hyped/line_graph.hpp"

namespace hyped {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

const char* to_string(EstimateStatus status) {
  switch (status) {
    case EstimateStatus::Exact: return "exact";
    case EstimateStatus::Bounded: return "bounded";
    case EstimateStatus::SmallComponent: return "small-component";
    case EstimateStatus::Disconnected: return "disconnected";
    case EstimateStatus::Uncovered: return "uncovered";
  }
  return "?";
}

std::size_t Oracle::stored_triples() const {
  std::size_t n = 0;
  for (const auto& level : labels) {
    for (const auto& l : level) n += l.size();
  }
  return n;
}

void Oracle::finalize() {
  max_level_.assign(n_edges, 0);
  for (std::uint32_t s = 1; s <= s_max; ++s) {
    for (EdgeId e = 0; e < n_edges; ++e) {
      if (comp_of[s - 1][e] != kNone) max_level_[e] = s;
    }
  }
  landmarks.assign(s_max, {});
  for (std::uint32_t s = 1; s <= s_max; ++s) {
    std::vector<EdgeId> roster;
    for (EdgeId e = 0; e < n_edges; ++e) {
      for (const auto& [l, d] : labels[s - 1][e]) {
        if (l == e && d == 0) roster.push_back(e);  // self label marks a landmark
      }
    }
    std::sort(roster.begin(), roster.end());
    landmarks[s - 1] = std::move(roster);
  }
}

Oracle build_oracle(const Hypergraph& h, const AssignmentConfig& cfg,
                    std::uint32_t s_max, BuildReport* report,
                    unsigned n_threads) {
  auto t0 = std::chrono::steady_clock::now();
  cfg.validate();
  if (s_max < 1) throw std::invalid_argument("s_max must be >= 1");
  if (n_threads == 0) n_threads = std::max(1u, std::thread::hardware_concurrency());

  Oracle o;
  o.s_max = s_max;
  o.d_min = cfg.d_min;
  o.seed = cfg.seed;
  o.n_edges = h.num_edges();
  o.avgd = AvgDistTable::compute(cfg.d_min);
  for (double& v : o.avgd.values) {
    v = std::round(v * 1e6) / 1e6;  // match the 6-decimal file format exactly
  }

  auto [cc, ledger] = find_connected_components(h, s_max);
  o.comp_of = cc.comp_of;
  o.comp_size = cc.comp_size;

  AdjacencyCache adjacency(h);
  LandmarkSet set = assign_landmarks(cc, h, adjacency, cfg);

  o.labels.assign(s_max, std::vector<std::vector<std::pair<EdgeId, Dist>>>(
                             h.num_edges()));
  for (std::uint32_t s = 1; s <= s_max; ++s) {
    std::vector<EdgeId> roster;
    for (const auto& [e, cid] : set.per_s[s - 1]) roster.push_back(e);
    std::sort(roster.begin(), roster.end());

    // per-landmark BFS floods, parallel over landmarks, merged in id order
    const auto& adj = adjacency.at(s);
    std::vector<std::vector<Dist>> dists(roster.size());
    auto flood = [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        dists[i] = bfs_distances(adj, roster[i]);
      }
    };
    if (n_threads <= 1 || roster.size() <= 1) {
      flood(0, roster.size());
    } else {
      std::vector<std::thread> workers;
      std::size_t chunk = (roster.size() + n_threads - 1) / n_threads;
      for (std::size_t begin = 0; begin < roster.size(); begin += chunk) {
        workers.emplace_back(flood, begin, std::min(begin + chunk, roster.size()));
      }
      for (auto& w : workers) w.join();
    }
    for (std::size_t i = 0; i < roster.size(); ++i) {
      for (EdgeId e = 0; e < h.num_edges(); ++e) {
        if (dists[i][e] != kInfDist) {
          o.labels[s - 1][e].emplace_back(roster[i], dists[i][e]);
        }
      }
    }
  }
  o.finalize();

  if (report) {
    report->q_est = set.q_est;
    report->n_landmarks = set.total_landmarks();
    report->label_triples = o.stored_triples();
    report->no_eligible_component = set.no_eligible_component;
    report->off_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
  }
  return o;
}

DistanceEstimate estimate_h2h(const Oracle& o, EdgeId e, EdgeId f,
                              std::uint32_t s) {
  if (e >= o.n_edges || f >= o.n_edges) {
    throw std::invalid_argument("invalid hyperedge id");
  }
  if (s < 1 || s > o.s_max) {
    throw std::invalid_argument("s must be in [1, oracle s_max]");
  }
  DistanceEstimate out;
  out.s = s;
  if (e == f) return out;  // 0, exact

  std::uint32_t ce = o.comp_of[s - 1][e];
  std::uint32_t cf = o.comp_of[s - 1][f];
  if (ce == kNone || cf == kNone || ce != cf) {
    out.lb = out.ub = out.estimate = kInf;
    out.status = EstimateStatus::Disconnected;
    return out;
  }
  std::uint32_t size = o.comp_size[s - 1][ce];
  if (size <= o.d_min) {
    out.lb = 1;
    out.ub = size - 1;
    out.estimate = o.avgd.at(size);
    out.status = EstimateStatus::SmallComponent;
    return out;
  }

  const auto& le = o.labels[s - 1][e];
  const auto& lf = o.labels[s - 1][f];
  double lb = 0, ub = kInf;
  bool common = false;
  std::size_t i = 0, j = 0;
  while (i < le.size() && j < lf.size()) {
    if (le[i].first < lf[j].first) ++i;
    else if (le[i].first > lf[j].first) ++j;
    else {
      common = true;
      double de = le[i].second, df = lf[j].second;
      lb = std::max(lb, std::abs(de - df));
      ub = std::min(ub, de + df);
      ++i;
      ++j;
    }
  }
  if (!common) {
    out.lb = 1;
    out.ub = kInf;
    out.estimate = 1;
    out.status = EstimateStatus::Uncovered;
    return out;
  }
  out.lb = std::max(lb, 1.0);  // distinct hyperedges are at distance >= 1
  out.ub = ub;
  out.estimate = (out.lb + out.ub) / 2;
  out.status = out.lb == out.ub ? EstimateStatus::Exact : EstimateStatus::Bounded;
  return out;
}

namespace {

// Observation-1 refinement: lb and ub become non-decreasing in s, estimates
// are recomputed from the refined bounds.
void refine_profile(const Oracle& o, DistanceProfile& profile) {
  auto& entries = profile.entries;
  for (std::size_t i = 1; i < entries.size(); ++i) {
    entries[i].lb = std::max(entries[i].lb, entries[i - 1].lb);
  }
  for (std::size_t i = entries.size(); i-- > 1;) {
    entries[i - 1].ub = std::min(entries[i - 1].ub, entries[i].ub);
  }
  for (auto& est : entries) {
    switch (est.status) {
      case EstimateStatus::Bounded:
      case EstimateStatus::Uncovered:
        if (std::isinf(est.ub)) {
          est.estimate = std::max(est.lb, 1.0);
        } else {
          est.estimate = (est.lb + est.ub) / 2;
          if (est.lb == est.ub) est.status = EstimateStatus::Exact;
        }
        break;
      case EstimateStatus::SmallComponent:
        est.estimate = std::clamp(est.estimate, est.lb, est.ub);
        break;
      default:
        break;
    }
  }
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].status != EstimateStatus::Exact &&
        std::isfinite(entries[i].estimate) &&
        std::isfinite(entries[i - 1].estimate)) {
      entries[i].estimate = std::max(entries[i].estimate, entries[i - 1].estimate);
    }
  }
}

}  // namespace

DistanceProfile profile_h2h(const Oracle& o, EdgeId e, EdgeId f) {
  if (e >= o.n_edges || f >= o.n_edges) {
    throw std::invalid_argument("invalid hyperedge id");
  }
  DistanceProfile profile;
  std::uint32_t s_top = std::min(o.max_level(e), o.max_level(f));
  if (e == f) s_top = o.max_level(e);
  for (std::uint32_t s = 1; s <= s_top; ++s) {
    profile.entries.push_back(estimate_h2h(o, e, f, s));
  }
  refine_profile(o, profile);
  return profile;
}

namespace {

DistanceEstimate combine_min(std::uint32_t s,
                             const std::vector<DistanceEstimate>& parts,
                             double shift) {
  DistanceEstimate out;
  out.s = s;
  out.lb = out.ub = out.estimate = kInf;
  out.status = EstimateStatus::Disconnected;
  for (const auto& p : parts) {
    out.lb = std::min(out.lb, p.lb);
    out.ub = std::min(out.ub, p.ub);
    if (p.estimate < out.estimate) {
      out.estimate = p.estimate;
      out.status = p.status;
    }
  }
  if (std::isinf(out.estimate)) return out;
  out.lb += shift;
  out.ub += shift;
  out.estimate += shift;
  return out;
}

}  // namespace

DistanceEstimate estimate_v2v(const Oracle& o, const Hypergraph& h, VertexId u,
                              VertexId v, std::uint32_t s) {
  if (u >= h.num_vertices() || v >= h.num_vertices()) {
    throw std::invalid_argument("invalid vertex id");
  }
  DistanceEstimate out;
  out.s = s;
  if (u == v) return out;  // 0, exact

  std::uint32_t cap_u = 0, cap_v = 0;
  for (EdgeId e : h.edges_of(u)) cap_u = std::max(cap_u, o.max_level(e));
  for (EdgeId e : h.edges_of(v)) cap_v = std::max(cap_v, o.max_level(e));
  if (s > std::min(cap_u, cap_v)) {
    out.lb = out.ub = out.estimate = kInf;
    out.status = EstimateStatus::Disconnected;
    return out;
  }
  for (EdgeId e : h.edges_of(u)) {
    if (h.edge_contains(e, v)) {
      out.lb = out.ub = out.estimate = 1;
      out.status = EstimateStatus::Exact;
      return out;
    }
  }
  std::vector<DistanceEstimate> parts;
  for (EdgeId e : h.edges_of(u)) {
    for (EdgeId f : h.edges_of(v)) {
      parts.push_back(estimate_h2h(o, e, f, s));
    }
  }
  return combine_min(s, parts, 1.0);
}

DistanceEstimate estimate_v2e(const Oracle& o, const Hypergraph& h, VertexId u,
                              EdgeId f, std::uint32_t s) {
  if (u >= h.num_vertices()) throw std::invalid_argument("invalid vertex id");
  if (f >= o.n_edges) throw std::invalid_argument("invalid hyperedge id");
  DistanceEstimate out;
  out.s = s;
  if (h.edge_contains(f, u)) return out;  // membership, 0, exact

  std::vector<DistanceEstimate> parts;
  for (EdgeId e : h.edges_of(u)) {
    parts.push_back(estimate_h2h(o, e, f, s));
  }
  if (parts.empty()) {
    out.lb = out.ub = out.estimate = kInf;
    out.status = EstimateStatus::Disconnected;
    return out;
  }
  return combine_min(s, parts, 0.0);
}

std::vector<RankedNeighbor> top_k_neighbors(
    const Oracle& o, const Hypergraph& h, const TopKQuery& query,
    std::uint32_t s, std::uint32_t k,
    const std::vector<std::uint32_t>& entity_labels,
    const AdjacencyCache* exact) {
  std::size_t universe = query.query_is_vertex ? h.num_vertices() : h.num_edges();
  if (query.id >= universe) throw std::invalid_argument("invalid query id");
  if (entity_labels.size() != universe) {
    throw std::invalid_argument("label vector does not match the entity universe");
  }
  std::uint32_t label = entity_labels[query.id];

  std::vector<double> distance;
  if (exact != nullptr) {
    distance.assign(universe, kInf);
    const auto& adj = exact->at(s);
    if (query.query_is_vertex) {
      // multi-source BFS from the hyperedges containing the query vertex
      std::vector<Dist> dist(h.num_edges(), kInfDist);
      std::vector<EdgeId> frontier;
      for (EdgeId e : h.edges_of(query.id)) {
        if (h.edge_size(e) >= s) {
          dist[e] = 0;
          frontier.push_back(e);
        }
      }
      for (std::size_t i = 0; i < frontier.size(); ++i) {
        EdgeId u = frontier[i];
        for (EdgeId w : adj.neighbors(u)) {
          if (dist[w] == kInfDist) {
            dist[w] = dist[u] + 1;
            frontier.push_back(w);
          }
        }
      }
      for (VertexId w = 0; w < h.num_vertices(); ++w) {
        for (EdgeId f : h.edges_of(w)) {
          if (dist[f] != kInfDist) {
            distance[w] = std::min(distance[w], static_cast<double>(dist[f]) + 1);
          }
        }
      }
      distance[query.id] = 0;
    } else {
      auto dist = bfs_distances(adj, query.id);
      for (EdgeId f = 0; f < h.num_edges(); ++f) {
        if (dist[f] != kInfDist) distance[f] = dist[f];
      }
      if (h.edge_size(query.id) < s) {
        std::fill(distance.begin(), distance.end(), kInf);
        distance[query.id] = 0;
      }
    }
  } else {
    distance.assign(universe, kInf);
    for (std::uint32_t c = 0; c < universe; ++c) {
      if (entity_labels[c] != label || c == query.id) continue;
      DistanceEstimate est =
          query.query_is_vertex
              ? estimate_v2v(o, h, query.id, c, s)
              : estimate_h2h(o, query.id, static_cast<EdgeId>(c), s);
      distance[c] = est.estimate;
    }
  }

  std::vector<RankedNeighbor> ranked;
  for (std::uint32_t c = 0; c < universe; ++c) {
    if (c == query.id || entity_labels[c] != label || label == kNone) continue;
    ranked.push_back({c, distance[c]});
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const RankedNeighbor& a, const RankedNeighbor& b) {
                     return a.distance < b.distance ||
                            (a.distance == b.distance && a.id < b.id);
                   });
  if (ranked.size() > k) ranked.resize(k);
  return ranked;
}

void save_oracle(const Oracle& o, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write oracle file: " + path.string());
  out << "#HYPED-ORACLE v1\n";
  out << "meta smax=" << o.s_max << " dmin=" << o.d_min << " seed=" << o.seed
      << "\n";
  char buf[64];
  for (std::uint32_t size = 2; size <= o.d_min; ++size) {
    std::snprintf(buf, sizeof buf, "%.6f", o.avgd.at(size));
    out << "avgd " << size << " " << buf << "\n";
  }
  for (std::uint32_t s = 1; s <= o.s_max; ++s) {
    for (EdgeId e = 0; e < o.n_edges; ++e) {
      if (o.comp_of[s - 1][e] != kNone) {
        out << "comp " << s << " " << e << " " << o.comp_of[s - 1][e] << "\n";
      }
    }
  }
  for (std::uint32_t s = 1; s <= o.s_max; ++s) {
    for (std::uint32_t cid = 0; cid < o.comp_size[s - 1].size(); ++cid) {
      out << "csize " << s << " " << cid << " " << o.comp_size[s - 1][cid]
          << "\n";
    }
  }
  for (std::uint32_t s = 1; s <= o.s_max; ++s) {
    for (EdgeId e = 0; e < o.n_edges; ++e) {
      const auto& l = o.labels[s - 1][e];
      if (l.empty()) continue;
      out << "label " << s << " " << e;
      for (const auto& [landmark, d] : l) out << " " << landmark << ":" << d;
      out << "\n";
    }
  }
  if (!out) throw std::runtime_error("failed writing oracle file: " + path.string());
}

Oracle load_oracle(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw OracleFormatError("cannot open oracle file: " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != "#HYPED-ORACLE v1") {
    throw OracleFormatError("header: not a HYPED-ORACLE v1 file");
  }
  Oracle o;
  if (!std::getline(in, line) ||
      std::sscanf(line.c_str(), "meta smax=%u dmin=%u seed=%llu", &o.s_max,
                  &o.d_min, reinterpret_cast<unsigned long long*>(&o.seed)) != 3) {
    throw OracleFormatError("meta: malformed meta line");
  }
  if (o.s_max < 1 || o.d_min < 2 || o.d_min > 5) {
    throw OracleFormatError("meta: smax/dmin out of range");
  }
  o.avgd.d_min = o.d_min;
  o.avgd.values.assign(o.d_min - 1, 0);

  struct CompRec { std::uint32_t s, e, cid; };
  std::vector<CompRec> comps;
  struct SizeRec { std::uint32_t s, cid, size; };
  std::vector<SizeRec> sizes;
  struct LabelRec { std::uint32_t s, e; std::vector<std::pair<EdgeId, Dist>> l; };
  std::vector<LabelRec> labelrecs;
  std::size_t seen_avgd = 0;

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (kind == "avgd") {
      std::uint32_t size; double value;
      if (!(ls >> size >> value) || size < 2 || size > o.d_min) {
        throw OracleFormatError("avgd: malformed line: " + line);
      }
      o.avgd.values[size - 2] = value;
      ++seen_avgd;
    } else if (kind == "comp") {
      CompRec r;
      if (!(ls >> r.s >> r.e >> r.cid) || r.s < 1 || r.s > o.s_max) {
        throw OracleFormatError("comp: malformed line: " + line);
      }
      comps.push_back(r);
    } else if (kind == "csize") {
      SizeRec r;
      if (!(ls >> r.s >> r.cid >> r.size) || r.s < 1 || r.s > o.s_max) {
        throw OracleFormatError("csize: malformed line: " + line);
      }
      sizes.push_back(r);
    } else if (kind == "label") {
      LabelRec r;
      if (!(ls >> r.s >> r.e) || r.s < 1 || r.s > o.s_max) {
        throw OracleFormatError("label: malformed line: " + line);
      }
      std::string tok;
      while (ls >> tok) {
        auto colon = tok.find(':');
        if (colon == std::string::npos) {
          throw OracleFormatError("label: malformed entry: " + tok);
        }
        r.l.emplace_back(
            static_cast<EdgeId>(std::stoul(tok.substr(0, colon))),
            static_cast<Dist>(std::stoul(tok.substr(colon + 1))));
      }
      labelrecs.push_back(std::move(r));
    } else {
      throw OracleFormatError("unknown section: " + kind);
    }
  }
  if (seen_avgd != o.d_min - 1u) {
    throw OracleFormatError("avgd: expected " + std::to_string(o.d_min - 1) +
                            " entries");
  }

  std::size_t n_edges = 0;
  for (const auto& r : comps) n_edges = std::max<std::size_t>(n_edges, r.e + 1);
  for (const auto& r : labelrecs) {
    n_edges = std::max<std::size_t>(n_edges, r.e + 1);
  }
  o.n_edges = n_edges;
  o.comp_of.assign(o.s_max, std::vector<std::uint32_t>(n_edges, kNone));
  for (const auto& r : comps) {
    if (r.e >= n_edges) throw OracleFormatError("comp: edge id out of range");
    o.comp_of[r.s - 1][r.e] = r.cid;
  }
  o.comp_size.assign(o.s_max, {});
  for (const auto& r : sizes) {
    auto& level = o.comp_size[r.s - 1];
    if (level.size() <= r.cid) level.resize(r.cid + 1, 0);
    level[r.cid] = r.size;
  }
  o.labels.assign(o.s_max,
                  std::vector<std::vector<std::pair<EdgeId, Dist>>>(n_edges));
  for (auto& r : labelrecs) {
    o.labels[r.s - 1][r.e] = std::move(r.l);
  }
  o.finalize();
  return o;
}

}  // namespace hyped
