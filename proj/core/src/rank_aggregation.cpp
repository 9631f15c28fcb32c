#include "hyped/rank_aggregation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace hyped {

TiedRanking::TiedRanking(std::vector<std::vector<std::uint32_t>> buckets)
    : buckets_(std::move(buckets)) {
  for (auto& b : buckets_) {
    if (b.empty()) throw std::invalid_argument("empty bucket in tied ranking");
    std::sort(b.begin(), b.end());
  }
  rebuild_index();
}

TiedRanking TiedRanking::from_keys(const std::vector<double>& keys) {
  std::vector<std::uint32_t> order(keys.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return keys[a] < keys[b];
  });
  std::vector<std::vector<std::uint32_t>> buckets;
  for (std::uint32_t e : order) {
    if (buckets.empty() || keys[buckets.back().front()] != keys[e]) {
      buckets.push_back({e});
    } else {
      buckets.back().push_back(e);
    }
  }
  return TiedRanking(std::move(buckets));
}

void TiedRanking::rebuild_index() {
  std::size_t n = 0;
  for (const auto& b : buckets_) n += b.size();
  bucket_of_.assign(n, 0);
  for (std::uint32_t i = 0; i < buckets_.size(); ++i) {
    for (std::uint32_t e : buckets_[i]) {
      if (e >= n) throw std::invalid_argument("ranking elements must be dense 0..n-1");
      bucket_of_[e] = i;
    }
  }
}

TiedRanking TiedRanking::with_move_to_bucket(std::uint32_t element,
                                             std::uint32_t bucket) const {
  auto buckets = buckets_;
  auto& target = buckets[bucket];
  auto& source = buckets[bucket_of_[element]];
  source.erase(std::find(source.begin(), source.end(), element));
  target.insert(std::upper_bound(target.begin(), target.end(), element), element);
  std::erase_if(buckets, [](const auto& b) { return b.empty(); });
  TiedRanking out;
  out.buckets_ = std::move(buckets);
  out.rebuild_index();
  return out;
}

TiedRanking TiedRanking::with_move_to_new_bucket(std::uint32_t element,
                                                 std::uint32_t gap) const {
  auto buckets = buckets_;
  auto& source = buckets[bucket_of_[element]];
  source.erase(std::find(source.begin(), source.end(), element));
  std::erase_if(buckets, [](const auto& b) { return b.empty(); });
  gap = std::min<std::uint32_t>(gap, static_cast<std::uint32_t>(buckets.size()));
  buckets.insert(buckets.begin() + gap, {element});
  TiedRanking out;
  out.buckets_ = std::move(buckets);
  out.rebuild_index();
  return out;
}

namespace {

inline int relation(const TiedRanking& r, std::uint32_t x, std::uint32_t y) {
  std::uint32_t bx = r.bucket_of(x), by = r.bucket_of(y);
  return bx < by ? -1 : (bx > by ? 1 : 0);
}

inline double pair_cost(int r1, int r2, double p) {
  if (r1 == r2) return 0.0;
  if (r1 == 0 || r2 == 0) return p;
  return 1.0;
}

// Contribution of all pairs involving x to the weighted Kemeny score.
double row_score(const TiedRanking& pi, std::uint32_t x,
                 const std::vector<WeightedRanking>& inputs, double p) {
  double score = 0.0;
  for (std::uint32_t y = 0; y < pi.num_elements(); ++y) {
    if (y == x) continue;
    int rel = relation(pi, x, y);
    for (const auto& in : inputs) {
      score += in.weight * pair_cost(rel, relation(in.ranking, x, y), p);
    }
  }
  return score;
}

}  // namespace

double kendall_tau_ties(const TiedRanking& a, const TiedRanking& b, double p) {
  if (a.num_elements() != b.num_elements()) {
    throw std::invalid_argument("rankings cover different universes");
  }
  double total = 0.0;
  for (std::uint32_t x = 0; x < a.num_elements(); ++x) {
    for (std::uint32_t y = x + 1; y < a.num_elements(); ++y) {
      total += pair_cost(relation(a, x, y), relation(b, x, y), p);
    }
  }
  return total;
}

double kemeny_score(const TiedRanking& pi, const std::vector<WeightedRanking>& inputs,
                    double p) {
  double score = 0.0;
  for (const auto& in : inputs) {
    score += in.weight * kendall_tau_ties(in.ranking, pi, p);
  }
  return score;
}

TiedRanking consensus_ranking(const std::vector<WeightedRanking>& inputs,
                              std::uint64_t seed, double p) {
  (void)seed;  // the search is deterministic; kept for interface stability
  if (inputs.empty()) throw std::invalid_argument("consensus needs >= 1 ranking");
  constexpr int kMaxPasses = 20;
  constexpr double kEps = 1e-12;

  TiedRanking best;
  double best_score = std::numeric_limits<double>::infinity();

  for (const auto& start : inputs) {
    TiedRanking current = start.ranking;
    const std::uint32_t n = static_cast<std::uint32_t>(current.num_elements());
    for (int pass = 0; pass < kMaxPasses; ++pass) {
      bool improved = false;
      for (std::uint32_t x = 0; x < n; ++x) {
        double current_row = row_score(current, x, inputs, p);
        bool moved = false;
        for (std::uint32_t b = 0; !moved && b < current.num_buckets(); ++b) {
          if (b == current.bucket_of(x)) continue;
          TiedRanking candidate = current.with_move_to_bucket(x, b);
          if (row_score(candidate, x, inputs, p) < current_row - kEps) {
            current = std::move(candidate);
            moved = improved = true;
          }
        }
        for (std::uint32_t gap = 0; !moved && gap <= current.num_buckets(); ++gap) {
          TiedRanking candidate = current.with_move_to_new_bucket(x, gap);
          if (candidate == current) continue;
          if (row_score(candidate, x, inputs, p) < current_row - kEps) {
            current = std::move(candidate);
            moved = improved = true;
          }
        }
      }
      if (!improved) break;
    }
    double score = kemeny_score(current, inputs, p);
    if (score < best_score - kEps) {
      best_score = score;
      best = std::move(current);
    }
  }
  return best;
}

}  // namespace hyped
