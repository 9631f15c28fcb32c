#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hyped/avg_dist.hpp"
#include "hyped/connectivity.hpp"
#include "hyped/hypergraph.hpp"
#include "hyped/landmarks.hpp"

namespace hyped {

enum class EstimateStatus : std::uint8_t {
  Exact,
  Bounded,
  SmallComponent,
  Disconnected,
  Uncovered
};

const char* to_string(EstimateStatus status);

struct DistanceEstimate {
  std::uint32_t s = 0;
  double lb = 0;        // may be infinity
  double ub = 0;        // may be infinity
  double estimate = 0;  // may be infinity
  EstimateStatus status = EstimateStatus::Exact;
};

struct DistanceProfile {
  std::vector<DistanceEstimate> entries;  // entries[i] for s = i + 1
};

struct BuildReport {
  double off_seconds = 0;
  std::uint64_t q_est = 0;
  std::size_t n_landmarks = 0;
  std::size_t label_triples = 0;
  bool no_eligible_component = false;
};

// Landmark distance oracle: avgD table, per-(s, hyperedge) component ids,
// per-s landmark distance labels. Immutable after build/load.
class Oracle {
 public:
  std::uint32_t s_max = 0;
  std::uint32_t d_min = 0;
  std::uint64_t seed = 0;
  std::size_t n_edges = 0;
  AvgDistTable avgd;
  // comp_of[s-1][e]: component id at level s, kNone when |e| < s
  std::vector<std::vector<std::uint32_t>> comp_of;
  std::vector<std::vector<std::uint32_t>> comp_size;
  // labels[s-1][e]: (landmark, distance) pairs sorted by landmark id
  std::vector<std::vector<std::vector<std::pair<EdgeId, Dist>>>> labels;
  std::vector<std::vector<EdgeId>> landmarks;  // sorted roster per s

  // min(s_max, |e|): the largest level at which e is present
  std::uint32_t max_level(EdgeId e) const { return max_level_[e]; }
  std::size_t stored_triples() const;

  void finalize();  // recomputes max_level_ and the rosters from the fields

 private:
  std::vector<std::uint32_t> max_level_;
};

Oracle build_oracle(const Hypergraph& h, const AssignmentConfig& cfg,
                    std::uint32_t s_max, BuildReport* report = nullptr,
                    unsigned n_threads = 0);

DistanceEstimate estimate_h2h(const Oracle& o, EdgeId e, EdgeId f,
                              std::uint32_t s);
DistanceProfile profile_h2h(const Oracle& o, EdgeId e, EdgeId f);

DistanceEstimate estimate_v2v(const Oracle& o, const Hypergraph& h, VertexId u,
                              VertexId v, std::uint32_t s);
DistanceEstimate estimate_v2e(const Oracle& o, const Hypergraph& h, VertexId u,
                              EdgeId f, std::uint32_t s);

struct TopKQuery {
  bool query_is_vertex = false;
  std::uint32_t id = 0;
};

struct RankedNeighbor {
  std::uint32_t id = 0;
  double distance = 0;
};

// Candidates share the query's label (dense label ids, kNone = unlabeled),
// ranked by s-distance ascending with ties by id. When `exact` is given the
// ranking uses BFS ground truth instead of the oracle.
std::vector<RankedNeighbor> top_k_neighbors(
    const Oracle& o, const Hypergraph& h, const TopKQuery& query,
    std::uint32_t s, std::uint32_t k,
    const std::vector<std::uint32_t>& entity_labels,
    const AdjacencyCache* exact = nullptr);

class OracleFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void save_oracle(const Oracle& o, const std::filesystem::path& path);
Oracle load_oracle(const std::filesystem::path& path);

}  // namespace hyped
