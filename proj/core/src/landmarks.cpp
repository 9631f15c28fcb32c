#include "hyped/landmarks.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "hyped/line_graph.hpp"
#include "hyped/rank_aggregation.hpp"

namespace hyped {

std::uint64_t AssignmentConfig::resolve_budget(std::size_t n_edges) const {
  if (budget_q > 0) return budget_q;
  return static_cast<std::uint64_t>(budget_l * static_cast<double>(n_edges));
}

void AssignmentConfig::validate() const {
  if (alpha < 0 || beta < 0) throw std::invalid_argument("alpha, beta must be >= 0");
  if (strategy == AssignStrategy::Sampling && alpha + beta > 1.0 + 1e-12) {
    throw std::invalid_argument("sampling requires alpha + beta <= 1");
  }
  if (d_min < 2 || d_min > 5) throw std::invalid_argument("d_min must be in [2, 5]");
  if (pair_sample_fraction <= 0 || pair_sample_fraction > 1) {
    throw std::invalid_argument("pair_sample_fraction must be in (0, 1]");
  }
}

namespace {

struct Eligible {
  ComponentRef ref;
  std::vector<EdgeId> members;
};

std::vector<Eligible> eligible_components(const SComponents& cc,
                                          std::uint32_t d_min) {
  std::vector<Eligible> out;
  for (std::uint32_t s = 1; s <= cc.s_max; ++s) {
    auto members = cc.members(s);
    for (std::uint32_t cid = 0; cid < cc.num_components(s); ++cid) {
      if (cc.comp_size[s - 1][cid] > d_min) {
        Eligible e;
        e.ref = {s, cid, cc.comp_size[s - 1][cid], cc.comp_vertices[s - 1][cid], 0};
        e.members = std::move(members[cid]);
        out.push_back(std::move(e));
      }
    }
  }
  return out;
}

std::vector<EdgeId> assigned_in(const LandmarkSet& set, const ComponentRef& c) {
  std::vector<EdgeId> out;
  for (const auto& [e, cid] : set.per_s[c.s - 1]) {
    if (cid == c.comp_id) out.push_back(e);
  }
  return out;
}

}  // namespace

LandmarkSelector::LandmarkSelector(const Hypergraph& h,
                                   const AdjacencyCache& adjacency,
                                   const AssignmentConfig& cfg)
    : h_(h), adjacency_(adjacency), cfg_(cfg) {}

const LandmarkSelector::PathPool& LandmarkSelector::pool_for(
    const ComponentRef& c, const std::vector<EdgeId>& members,
    std::mt19937_64& rng) {
  std::uint64_t key = (static_cast<std::uint64_t>(c.s) << 32) | c.comp_id;
  auto it = pools_.find(key);
  if (it != pools_.end()) return it->second;

  PathPool pool;
  const auto& adj = adjacency_.at(c.s);
  std::size_t n_sample = std::max<std::size_t>(
      2, static_cast<std::size_t>(
             std::ceil(cfg_.pair_sample_fraction * members.size())));
  n_sample = std::min(n_sample, members.size());
  std::vector<EdgeId> sample = members;
  std::shuffle(sample.begin(), sample.end(), rng);
  sample.resize(n_sample);
  std::sort(sample.begin(), sample.end());

  // One shortest path per sampled pair, from the BFS parent tree with
  // lowest-id tie-breaking (neighbors visited in ascending order).
  std::vector<Dist> dist(h_.num_edges());
  std::vector<EdgeId> parent(h_.num_edges());
  for (std::size_t i = 0; i < sample.size(); ++i) {
    EdgeId src = sample[i];
    std::fill(dist.begin(), dist.end(), kInfDist);
    std::deque<EdgeId> queue{src};
    dist[src] = 0;
    parent[src] = src;
    while (!queue.empty()) {
      EdgeId u = queue.front();
      queue.pop_front();
      for (EdgeId w : adj.neighbors(u)) {
        if (dist[w] == kInfDist) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        }
      }
    }
    for (std::size_t j = i + 1; j < sample.size(); ++j) {
      EdgeId dst = sample[j];
      if (dist[dst] == kInfDist) continue;
      std::vector<EdgeId> path;
      for (EdgeId cur = dst;; cur = parent[cur]) {
        path.push_back(cur);
        if (cur == src) break;
      }
      pool.paths.push_back(std::move(path));
    }
  }
  return pools_.emplace(key, std::move(pool)).first->second;
}

EdgeId LandmarkSelector::select(const ComponentRef& c,
                                const std::vector<EdgeId>& members,
                                const std::vector<EdgeId>& already,
                                std::mt19937_64& rng) {
  std::vector<EdgeId> candidates;
  candidates.reserve(members.size());
  for (EdgeId e : members) {
    if (std::find(already.begin(), already.end(), e) == already.end()) {
      candidates.push_back(e);
    }
  }
  if (candidates.empty()) {
    throw std::logic_error("component is saturated, no landmark available");
  }

  switch (cfg_.selection) {
    case SelectStrategy::Random: {
      std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
      return candidates[pick(rng)];
    }
    case SelectStrategy::Degree: {
      const auto& adj = adjacency_.at(c.s);
      EdgeId best = candidates.front();
      std::size_t best_deg = adj.neighbors(best).size();
      for (EdgeId e : candidates) {
        std::size_t deg = adj.neighbors(e).size();
        if (deg > best_deg) {  // ties keep the lower id (candidates ascend)
          best = e;
          best_deg = deg;
        }
      }
      return best;
    }
    case SelectStrategy::Farthest: {
      if (already.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        return candidates[pick(rng)];
      }
      const auto& adj = adjacency_.at(c.s);
      std::vector<Dist> dist(h_.num_edges(), kInfDist);
      std::deque<EdgeId> queue;
      for (EdgeId l : already) {
        dist[l] = 0;
        queue.push_back(l);
      }
      while (!queue.empty()) {
        EdgeId u = queue.front();
        queue.pop_front();
        for (EdgeId w : adj.neighbors(u)) {
          if (dist[w] == kInfDist) {
            dist[w] = dist[u] + 1;
            queue.push_back(w);
          }
        }
      }
      EdgeId best = candidates.front();
      for (EdgeId e : candidates) {
        if (dist[e] > dist[best] ||
            (dist[e] == dist[best] && e < best)) {
          best = e;
        }
      }
      return best;
    }
    case SelectStrategy::BestCover: {
      const auto& pool = pool_for(c, members, rng);
      std::vector<char> covered(pool.paths.size(), 0);
      for (std::size_t i = 0; i < pool.paths.size(); ++i) {
        for (EdgeId l : already) {
          if (std::find(pool.paths[i].begin(), pool.paths[i].end(), l) !=
              pool.paths[i].end()) {
            covered[i] = 1;
            break;
          }
        }
      }
      std::vector<std::uint32_t> gain(h_.num_edges(), 0);
      for (std::size_t i = 0; i < pool.paths.size(); ++i) {
        if (covered[i]) continue;
        for (EdgeId e : pool.paths[i]) ++gain[e];
      }
      EdgeId best = candidates.front();
      for (EdgeId e : candidates) {
        if (gain[e] > gain[best]) best = e;  // ties keep the lower id
      }
      return best;
    }
    case SelectStrategy::Betweenness: {
      const auto& pool = pool_for(c, members, rng);
      std::vector<std::uint32_t> count(h_.num_edges(), 0);
      for (const auto& path : pool.paths) {
        for (EdgeId e : path) ++count[e];
      }
      EdgeId best = candidates.front();
      for (EdgeId e : candidates) {
        if (count[e] > count[best]) best = e;  // ties keep the lower id
      }
      return best;
    }
  }
  throw std::logic_error("unknown selection strategy");
}

LandmarkSet assign_sampling(const SComponents& cc, const Hypergraph& h,
                            const AdjacencyCache& adjacency,
                            const AssignmentConfig& cfg) {
  cfg.validate();
  const std::uint64_t budget = cfg.resolve_budget(h.num_edges());

  LandmarkSet result;
  result.per_s.resize(cc.s_max);
  auto eligible = eligible_components(cc, cfg.d_min);
  if (eligible.empty()) {
    result.no_eligible_component = true;
    return result;
  }

  // global normalizers over all components, not just the eligible ones
  double zeta = 0, xi = 0, eta = 0;
  for (std::uint32_t s = 1; s <= cc.s_max; ++s) {
    for (std::uint32_t size : cc.comp_size[s - 1]) zeta += size;
    for (std::uint32_t nv : cc.comp_vertices[s - 1]) xi += nv;
    eta += static_cast<double>(s) * cc.num_components(s);
  }

  std::vector<double> weight(eligible.size());
  for (std::size_t i = 0; i < eligible.size(); ++i) {
    const auto& r = eligible[i].ref;
    weight[i] = cfg.alpha * r.size / zeta + cfg.beta * r.s / eta +
                (1.0 - cfg.alpha - cfg.beta) * r.n_vertices / xi;
  }

  std::mt19937_64 rng(cfg.seed);
  LandmarkSelector selector(h, adjacency, cfg);
  std::vector<std::size_t> alive(eligible.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;

  while (result.q_est < budget && !alive.empty()) {
    double total = 0;
    for (std::size_t i : alive) total += weight[i];
    std::uniform_real_distribution<double> draw(0.0, total);
    double u = draw(rng);
    std::size_t chosen = alive.back();
    for (std::size_t i : alive) {
      u -= weight[i];
      if (u <= 0) {
        chosen = i;
        break;
      }
    }
    auto& comp = eligible[chosen];
    if (comp.ref.assigned < comp.ref.size) {
      auto already = assigned_in(result, comp.ref);
      EdgeId landmark = selector.select(comp.ref, comp.members, already, rng);
      result.per_s[comp.ref.s - 1].emplace_back(landmark, comp.ref.comp_id);
      ++comp.ref.assigned;
      result.q_est += comp.ref.size;
    }
    if (comp.ref.assigned >= comp.ref.size) {
      alive.erase(std::find(alive.begin(), alive.end(), chosen));
    }
  }
  return result;
}

LandmarkSet assign_rankagg(const SComponents& cc, const Hypergraph& h,
                           const AdjacencyCache& adjacency,
                           const AssignmentConfig& cfg) {
  cfg.validate();
  const std::uint64_t budget = cfg.resolve_budget(h.num_edges());

  LandmarkSet result;
  result.per_s.resize(cc.s_max);
  auto eligible = eligible_components(cc, cfg.d_min);
  if (eligible.empty()) {
    result.no_eligible_component = true;
    return result;
  }

  std::mt19937_64 rng(cfg.seed);
  LandmarkSelector selector(h, adjacency, cfg);
  std::vector<std::size_t> alive(eligible.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;

  while (result.q_est < budget && !alive.empty()) {
    // four tied rankings over the remaining components
    std::vector<double> k1, k2, k3, k4;
    for (std::size_t i : alive) {
      const auto& r = eligible[i].ref;
      k1.push_back(-static_cast<double>(r.size));
      k2.push_back(-static_cast<double>(r.n_vertices));
      k3.push_back(-static_cast<double>(r.s));
      k4.push_back(static_cast<double>(r.assigned));
    }
    std::vector<WeightedRanking> inputs;
    inputs.push_back({TiedRanking::from_keys(k1), cfg.alpha});
    inputs.push_back({TiedRanking::from_keys(k2), cfg.alpha});
    inputs.push_back({TiedRanking::from_keys(k3), cfg.beta});
    inputs.push_back({TiedRanking::from_keys(k4), 1.0});

    TiedRanking consensus = consensus_ranking(inputs, cfg.seed);
    const auto& first = consensus.buckets().front();
    std::uniform_int_distribution<std::size_t> pick(0, first.size() - 1);
    std::size_t chosen = alive[first[pick(rng)]];

    auto& comp = eligible[chosen];
    auto already = assigned_in(result, comp.ref);
    EdgeId landmark = selector.select(comp.ref, comp.members, already, rng);
    result.per_s[comp.ref.s - 1].emplace_back(landmark, comp.ref.comp_id);
    ++comp.ref.assigned;
    result.q_est += comp.ref.size;
    if (comp.ref.assigned >= comp.ref.size) {
      alive.erase(std::find(alive.begin(), alive.end(), chosen));
    }
  }
  return result;
}

LandmarkSet assign_landmarks(const SComponents& cc, const Hypergraph& h,
                             const AdjacencyCache& adjacency,
                             const AssignmentConfig& cfg) {
  return cfg.strategy == AssignStrategy::Sampling
             ? assign_sampling(cc, h, adjacency, cfg)
             : assign_rankagg(cc, h, adjacency, cfg);
}

}  // namespace hyped
