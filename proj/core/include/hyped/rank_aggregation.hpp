#pragma once

#include <cstdint>
#include <vector>

namespace hyped {

// Ranking with ties over elements 0..n-1: an ordered sequence of disjoint
// buckets whose union is the whole universe.
class TiedRanking {
 public:
  TiedRanking() = default;
  explicit TiedRanking(std::vector<std::vector<std::uint32_t>> buckets);

  // Builds a ranking from per-element sort keys: smaller key ranks first,
  // equal keys share a bucket.
  static TiedRanking from_keys(const std::vector<double>& keys);

  std::size_t num_elements() const { return bucket_of_.size(); }
  std::size_t num_buckets() const { return buckets_.size(); }
  const std::vector<std::vector<std::uint32_t>>& buckets() const { return buckets_; }
  // Bucket index of an element; elements in earlier buckets rank higher.
  std::uint32_t bucket_of(std::uint32_t element) const { return bucket_of_[element]; }

  // Moves an element into an existing bucket (0 <= bucket < num_buckets) or
  // into a new singleton bucket inserted at `gap` (0 <= gap <= num_buckets,
  // counted before the removal of the element's old bucket if it empties).
  TiedRanking with_move_to_bucket(std::uint32_t element, std::uint32_t bucket) const;
  TiedRanking with_move_to_new_bucket(std::uint32_t element, std::uint32_t gap) const;

  bool operator==(const TiedRanking& other) const { return buckets_ == other.buckets_; }

 private:
  void rebuild_index();
  std::vector<std::vector<std::uint32_t>> buckets_;
  std::vector<std::uint32_t> bucket_of_;
};

// Generalized Kendall-tau with tie penalty p: per unordered element pair,
// 0 when ordered identically (or tied in both), 1 when strictly opposite,
// p when tied in exactly one ranking.
double kendall_tau_ties(const TiedRanking& a, const TiedRanking& b, double p);

inline constexpr double kDefaultTiePenalty = 0.5;

struct WeightedRanking {
  TiedRanking ranking;
  double weight = 1.0;
};

// Weighted Kemeny score: sum_i w_i * K_tau(pi_i, pi).
double kemeny_score(const TiedRanking& pi, const std::vector<WeightedRanking>& inputs,
                    double p = kDefaultTiePenalty);

// Local-search consensus: starting from each input ranking, applies
// move-element-to-bucket operations (existing bucket or new singleton bucket
// at any gap), accepting strict Kemeny-score improvements, until a full pass
// finds none (capped at 20 passes). Returns the best result across starts.
TiedRanking consensus_ranking(const std::vector<WeightedRanking>& inputs,
                              std::uint64_t seed = 0,
                              double p = kDefaultTiePenalty);

}  // namespace hyped
