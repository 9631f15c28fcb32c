#pragma once

#include <cstdint>
#include <random>
#include <unordered_map>
#include <vector>

#include "hyped/connectivity.hpp"
#include "hyped/hypergraph.hpp"

namespace hyped {

enum class AssignStrategy : std::uint8_t { Sampling, RankAgg };
enum class SelectStrategy : std::uint8_t {
  Random,
  Degree,
  Farthest,
  BestCover,
  Betweenness
};

struct AssignmentConfig {
  std::uint64_t budget_q = 0;  // takes precedence when nonzero
  double budget_l = 0.0;       // Q = budget_l * |E| when budget_q is 0
  std::uint32_t d_min = 4;
  double alpha = 0.2;
  double beta = 0.6;
  AssignStrategy strategy = AssignStrategy::Sampling;
  SelectStrategy selection = SelectStrategy::Degree;
  std::uint64_t seed = 0;
  double pair_sample_fraction = 0.4;

  std::uint64_t resolve_budget(std::size_t n_edges) const;
  void validate() const;
};

// One eligible s-connected component tracked during assignment.
struct ComponentRef {
  std::uint32_t s = 0;
  std::uint32_t comp_id = 0;
  std::uint32_t size = 0;        // |c^s|
  std::uint32_t n_vertices = 0;  // |V_{c^s}|
  std::uint32_t assigned = 0;
};

struct LandmarkSet {
  // per_s[s-1]: landmarks in assignment order, with their component ids
  std::vector<std::vector<std::pair<EdgeId, std::uint32_t>>> per_s;
  std::uint64_t q_est = 0;
  bool no_eligible_component = false;

  std::size_t total_landmarks() const {
    std::size_t n = 0;
    for (const auto& level : per_s) n += level.size();
    return n;
  }
};

// Picks one new landmark inside a component according to cfg.selection.
// Shortest-path pools for bestcover/betweenness are sampled once per
// component and cached.
class LandmarkSelector {
 public:
  LandmarkSelector(const Hypergraph& h, const AdjacencyCache& adjacency,
                   const AssignmentConfig& cfg);

  EdgeId select(const ComponentRef& c, const std::vector<EdgeId>& members,
                const std::vector<EdgeId>& already, std::mt19937_64& rng);

 private:
  struct PathPool {
    std::vector<std::vector<EdgeId>> paths;
  };
  const PathPool& pool_for(const ComponentRef& c,
                           const std::vector<EdgeId>& members,
                           std::mt19937_64& rng);

  const Hypergraph& h_;
  const AdjacencyCache& adjacency_;
  const AssignmentConfig& cfg_;
  std::unordered_map<std::uint64_t, PathPool> pools_;  // key (s, comp_id)
};

LandmarkSet assign_sampling(const SComponents& cc, const Hypergraph& h,
                            const AdjacencyCache& adjacency,
                            const AssignmentConfig& cfg);

LandmarkSet assign_rankagg(const SComponents& cc, const Hypergraph& h,
                           const AdjacencyCache& adjacency,
                           const AssignmentConfig& cfg);

// Dispatch on cfg.strategy.
LandmarkSet assign_landmarks(const SComponents& cc, const Hypergraph& h,
                             const AdjacencyCache& adjacency,
                             const AssignmentConfig& cfg);

}  // namespace hyped
