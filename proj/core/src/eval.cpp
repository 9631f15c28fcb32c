#include "hyped/eval.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>

#include "hyped/line_graph.hpp"

namespace hyped {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

QueryBatch sample_queries(const Hypergraph& h, const SComponents& cc,
                          std::uint32_t per_s, double cross_frac,
                          std::uint64_t seed) {
  QueryBatch batch;
  batch.per_s = per_s;
  batch.cross_frac = cross_frac;
  batch.seed = seed;
  std::mt19937_64 rng(seed);

  for (std::uint32_t s = 1; s <= cc.s_max; ++s) {
    auto members = cc.members(s);
    std::vector<std::uint32_t> multi;  // components with >= 2 members
    std::vector<double> weight;        // size-choose-2
    std::vector<EdgeId> present;       // all level-s hyperedges
    for (std::uint32_t cid = 0; cid < members.size(); ++cid) {
      present.insert(present.end(), members[cid].begin(), members[cid].end());
      if (members[cid].size() >= 2) {
        multi.push_back(cid);
        double n = static_cast<double>(members[cid].size());
        weight.push_back(n * (n - 1) / 2);
      }
    }
    if (multi.empty()) {
      if (per_s > 0) batch.empty_levels.push_back(s);
    } else {
      std::discrete_distribution<std::size_t> pick_comp(weight.begin(),
                                                        weight.end());
      for (std::uint32_t i = 0; i < per_s; ++i) {
        const auto& m = members[multi[pick_comp(rng)]];
        std::uniform_int_distribution<std::size_t> pick(0, m.size() - 1);
        std::size_t a = pick(rng), b = pick(rng);
        while (b == a) b = pick(rng);
        batch.queries.push_back({QueryKind::HH, m[a], m[b], s});
      }
    }
    std::uint32_t n_cross = static_cast<std::uint32_t>(
        std::ceil(per_s * cross_frac));
    if (n_cross > 0 && present.size() >= 2 && members.size() >= 2) {
      std::uniform_int_distribution<std::size_t> pick(0, present.size() - 1);
      for (std::uint32_t i = 0; i < n_cross; ++i) {
        for (int attempt = 0; attempt < 64; ++attempt) {
          EdgeId a = present[pick(rng)], b = present[pick(rng)];
          if (a != b && cc.comp_of[s - 1][a] != cc.comp_of[s - 1][b]) {
            batch.queries.push_back({QueryKind::HH, a, b, s});
            break;
          }
        }
      }
    }
  }
  return batch;
}

double exact_query_distance(const Hypergraph& h, AdjacencyCache& cache,
                            const Query& q) {
  switch (q.kind) {
    case QueryKind::HH: {
      Dist d = exact_s_distance(h, cache.at(q.s), q.src, q.dst, q.s);
      return d == kInfDist ? kInf : d;
    }
    case QueryKind::VV: {
      if (q.src == q.dst) return 0;
      double best = kInf;
      for (EdgeId e : h.edges_of(q.src)) {
        if (h.edge_contains(e, q.dst)) return 1;
        for (EdgeId f : h.edges_of(q.dst)) {
          Dist d = exact_s_distance(h, cache.at(q.s), e, f, q.s);
          if (d != kInfDist) best = std::min(best, static_cast<double>(d) + 1);
        }
      }
      return best;
    }
    case QueryKind::VE: {
      if (h.edge_contains(q.dst, q.src)) return 0;
      double best = kInf;
      for (EdgeId e : h.edges_of(q.src)) {
        Dist d = exact_s_distance(h, cache.at(q.s), e, q.dst, q.s);
        if (d != kInfDist) best = std::min(best, static_cast<double>(d));
      }
      return best;
    }
  }
  return kInf;
}

namespace {

double quantile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return std::numeric_limits<double>::quiet_NaN();
  double pos = q * (sorted.size() - 1);
  std::size_t lo = static_cast<std::size_t>(pos);
  std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  double frac = pos - lo;
  return sorted[lo] * (1 - frac) + sorted[hi] * frac;
}

}  // namespace

EvalReport evaluate(const Oracle& o, const Hypergraph& h,
                    const QueryBatch& batch, AdjacencyCache& ground_truth) {
  EvalReport report;
  report.n_queries = batch.queries.size();
  report.rows.reserve(batch.queries.size());

  std::size_t uncovered = 0, reach_errors = 0;
  double abs_sum = 0, sq_sum = 0;
  std::vector<double> l1;

  auto t0 = std::chrono::steady_clock::now();
  for (const Query& q : batch.queries) {
    DistanceEstimate est;
    switch (q.kind) {
      case QueryKind::HH: est = estimate_h2h(o, q.src, q.dst, q.s); break;
      case QueryKind::VV: est = estimate_v2v(o, h, q.src, q.dst, q.s); break;
      case QueryKind::VE: est = estimate_v2e(o, h, q.src, q.dst, q.s); break;
    }
    report.rows.push_back({q, 0, est});
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  report.time_per_query_us =
      batch.queries.empty() ? 0 : elapsed * 1e6 / batch.queries.size();

  for (PerQueryRow& row : report.rows) {
    row.truth = exact_query_distance(h, ground_truth, row.q);
    if (row.est.status == EstimateStatus::Uncovered) ++uncovered;
    bool est_inf = std::isinf(row.est.estimate);
    bool true_inf = std::isinf(row.truth);
    if (est_inf != true_inf) {
      ++reach_errors;
    } else if (est_inf) {
      ++report.n_both_infinite;
    } else {
      double err = std::abs(row.est.estimate - row.truth);
      abs_sum += err;
      sq_sum += err * err;
      l1.push_back(err);
      ++report.n_scored;
    }
  }

  if (report.n_scored > 0) {
    report.mae = abs_sum / report.n_scored;
    report.rmse = std::sqrt(sq_sum / report.n_scored);
    std::sort(l1.begin(), l1.end());
    report.l1_p50 = quantile(l1, 0.5);
    report.l1_p90 = quantile(l1, 0.9);
    report.l1_p99 = quantile(l1, 0.99);
    report.l1_max = l1.back();
  } else {
    double nan = std::numeric_limits<double>::quiet_NaN();
    report.mae = report.rmse = nan;
    report.l1_p50 = report.l1_p90 = report.l1_p99 = report.l1_max = nan;
  }
  if (report.n_queries > 0) {
    report.coverage_rate = static_cast<double>(uncovered) / report.n_queries;
    report.reach_error_rate =
        static_cast<double>(reach_errors) / report.n_queries;
  }
  return report;
}

std::optional<double> s_closeness_exact(const Hypergraph& h,
                                        AdjacencyCache& cache,
                                        const SComponents& cc, EdgeId e,
                                        std::uint32_t s) {
  std::uint32_t cid = cc.comp_of[s - 1][e];
  if (cid == kNone || cc.comp_size[s - 1][cid] < 2) return std::nullopt;
  auto dist = bfs_distances(cache.at(s), e);
  double sum = 0;
  for (EdgeId f = 0; f < h.num_edges(); ++f) {
    if (f != e && cc.comp_of[s - 1][f] == cid) sum += dist[f];
  }
  return sum / (cc.comp_size[s - 1][cid] - 1);
}

std::optional<double> s_closeness_estimated(const Oracle& o,
                                            const SComponents& cc, EdgeId e,
                                            std::uint32_t s) {
  std::uint32_t cid = cc.comp_of[s - 1][e];
  if (cid == kNone || cc.comp_size[s - 1][cid] < 2) return std::nullopt;
  double sum = 0;
  for (EdgeId f = 0; f < o.n_edges; ++f) {
    if (f != e && cc.comp_of[s - 1][f] == cid) {
      sum += estimate_h2h(o, e, f, s).estimate;
    }
  }
  return sum / (cc.comp_size[s - 1][cid] - 1);
}

namespace {

template <typename PerEdge>
std::optional<double> max_over_edges(const Hypergraph& h, VertexId v,
                                     PerEdge&& closeness) {
  std::optional<double> best;
  for (EdgeId e : h.edges_of(v)) {
    if (auto c = closeness(e)) {
      if (!best || *c > *best) best = *c;
    }
  }
  return best;
}

}  // namespace

std::optional<double> vertex_s_closeness_exact(const Hypergraph& h,
                                               AdjacencyCache& cache,
                                               const SComponents& cc,
                                               VertexId v, std::uint32_t s) {
  return max_over_edges(h, v, [&](EdgeId e) {
    return s_closeness_exact(h, cache, cc, e, s);
  });
}

std::optional<double> vertex_s_closeness_estimated(const Oracle& o,
                                                   const Hypergraph& h,
                                                   const SComponents& cc,
                                                   VertexId v,
                                                   std::uint32_t s) {
  return max_over_edges(h, v, [&](EdgeId e) {
    return s_closeness_estimated(o, cc, e, s);
  });
}

MapeLar mape_lar(const std::vector<double>& estimates,
                 const std::vector<double>& truths) {
  if (estimates.size() != truths.size()) {
    throw std::invalid_argument("mape_lar: size mismatch");
  }
  MapeLar out;
  double mape_sum = 0;
  for (std::size_t i = 0; i < estimates.size(); ++i) {
    double est = estimates[i], truth = truths[i];
    if (!(truth > 0) || !std::isfinite(truth) || !std::isfinite(est)) {
      ++out.n_excluded;
      continue;
    }
    mape_sum += std::abs(est - truth) / truth;
    ++out.n_mape;
    if (est > 0) {
      double r = std::log(est / truth);
      out.lar += r * r;
      ++out.n_lar;
    }
  }
  if (out.n_mape > 0) out.mape = mape_sum / out.n_mape;
  return out;
}

double avep_at_k(const std::vector<RankedNeighbor>& ranked_est,
                 const std::vector<RankedNeighbor>& ranked_true,
                 std::uint32_t k) {
  if (k == 0) return 0;
  // acceptable set: anything tied with the k-th exact distance
  std::vector<std::uint32_t> acceptable;
  if (ranked_true.size() <= k) {
    for (const auto& r : ranked_true) acceptable.push_back(r.id);
  } else {
    double threshold = ranked_true[k - 1].distance;
    for (const auto& r : ranked_true) {
      if (r.distance <= threshold) acceptable.push_back(r.id);
    }
  }
  std::sort(acceptable.begin(), acceptable.end());

  double sum = 0;
  std::uint32_t hits = 0;
  for (std::uint32_t i = 0; i < std::min<std::size_t>(k, ranked_est.size());
       ++i) {
    bool rel = std::binary_search(acceptable.begin(), acceptable.end(),
                                  ranked_est[i].id);
    if (rel) {
      ++hits;
      sum += static_cast<double>(hits) / (i + 1);
    }
  }
  return sum / k;
}

}  // namespace hyped
