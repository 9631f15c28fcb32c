#include <random>
#include <stdexcept>

#include "doctest.h"
#include "hyped/rank_aggregation.hpp"

using namespace hyped;

namespace {

TiedRanking strict(std::vector<std::uint32_t> order) {
  std::vector<std::vector<std::uint32_t>> buckets;
  for (auto e : order) buckets.push_back({e});
  return TiedRanking(std::move(buckets));
}

// All tied rankings over n elements (ordered set partitions), by recursion.
void all_rankings(std::uint32_t n, std::vector<TiedRanking>& out) {
  std::vector<std::vector<std::uint32_t>> buckets;
  std::vector<std::uint32_t> elements(n);
  for (std::uint32_t i = 0; i < n; ++i) elements[i] = i;
  // place element i into any existing bucket or a new one at any position
  struct Rec {
    std::vector<TiedRanking>& out;
    void go(std::vector<std::vector<std::uint32_t>>& buckets,
            std::uint32_t next, std::uint32_t n) {
      if (next == n) {
        out.push_back(TiedRanking(buckets));
        return;
      }
      // index loop: deeper recursion may reallocate `buckets`
      for (std::size_t i = 0; i < buckets.size(); ++i) {
        buckets[i].push_back(next);
        go(buckets, next + 1, n);
        buckets[i].pop_back();
      }
      for (std::size_t pos = 0; pos <= buckets.size(); ++pos) {
        buckets.insert(buckets.begin() + pos, {next});
        go(buckets, next + 1, n);
        buckets.erase(buckets.begin() + pos);
      }
    }
  } rec{out};
  rec.go(buckets, 0, n);
}

}  // namespace

TEST_CASE("from_keys groups equal keys and orders ascending") {
  TiedRanking r = TiedRanking::from_keys({3.0, 1.0, 3.0, 2.0});
  REQUIRE(r.num_buckets() == 3);
  CHECK(r.buckets()[0] == std::vector<std::uint32_t>{1});
  CHECK(r.buckets()[1] == std::vector<std::uint32_t>{3});
  CHECK(r.buckets()[2] == std::vector<std::uint32_t>{0, 2});
  CHECK(r.bucket_of(0) == 2);
  CHECK(r.num_elements() == 4);
}

TEST_CASE("kendall tau with ties: frozen small cases") {
  auto a = strict({0, 1, 2});
  auto b = strict({2, 1, 0});
  CHECK(kendall_tau_ties(a, a, 0.5) == 0.0);
  CHECK(kendall_tau_ties(a, b, 0.5) == 3.0);  // every pair inverted
  TiedRanking tied({{0, 1, 2}});              // everything tied
  CHECK(kendall_tau_ties(a, tied, 0.5) == 1.5);  // three pairs at penalty p
  CHECK(kendall_tau_ties(tied, tied, 0.5) == 0.0);
  // symmetry
  std::mt19937_64 rng(5);
  std::vector<TiedRanking> all;
  all_rankings(3, all);
  for (const auto& x : all) {
    for (const auto& y : all) {
      CHECK(kendall_tau_ties(x, y, 0.5) == kendall_tau_ties(y, x, 0.5));
    }
  }
  TiedRanking other({{0, 1}});
  CHECK_THROWS_AS(kendall_tau_ties(a, other, 0.5), std::invalid_argument);
}

TEST_CASE("there are 13 tied rankings over 3 elements") {
  std::vector<TiedRanking> all;
  all_rankings(3, all);
  std::sort(all.begin(), all.end(), [](const TiedRanking& x, const TiedRanking& y) {
    return x.buckets() < y.buckets();
  });
  all.erase(std::unique(all.begin(), all.end()), all.end());
  CHECK(all.size() == 13);
}

TEST_CASE("move operations keep a valid ranking") {
  TiedRanking r({{0}, {1, 2}, {3}});
  TiedRanking moved = r.with_move_to_bucket(3, 1);
  CHECK(moved.buckets() == std::vector<std::vector<std::uint32_t>>{{0}, {1, 2, 3}});
  TiedRanking fresh = r.with_move_to_new_bucket(1, 0);
  CHECK(fresh.buckets() ==
        std::vector<std::vector<std::uint32_t>>{{1}, {0}, {2}, {3}});
  // moving a singleton away collapses its old bucket
  TiedRanking gone = r.with_move_to_bucket(0, 1);
  CHECK(gone.num_buckets() == 2);
}

TEST_CASE("kemeny score is the weighted sum of tau distances") {
  auto a = strict({0, 1, 2});
  auto b = strict({2, 1, 0});
  std::vector<WeightedRanking> inputs{{a, 2.0}, {b, 0.5}};
  CHECK(kemeny_score(a, inputs) == doctest::Approx(0.5 * 3.0));
  CHECK(kemeny_score(b, inputs) == doctest::Approx(2.0 * 3.0));
}

TEST_CASE("consensus of identical inputs is that input") {
  auto a = strict({2, 0, 1});
  std::vector<WeightedRanking> inputs{{a, 1.0}, {a, 1.0}, {a, 1.0}};
  CHECK(consensus_ranking(inputs) == a);
}

TEST_CASE("consensus follows the weighted majority") {
  auto a = strict({0, 1, 2});
  auto b = strict({2, 1, 0});
  std::vector<WeightedRanking> inputs{{a, 5.0}, {b, 1.0}};
  CHECK(consensus_ranking(inputs) == a);
}

TEST_CASE("consensus matches the exhaustive optimum on random 4-element instances") {
  std::vector<TiedRanking> all;
  all_rankings(4, all);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::uniform_real_distribution<double> w(0.5, 2.0);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<WeightedRanking> inputs;
    for (int i = 0; i < 3; ++i) inputs.push_back({all[pick(rng)], w(rng)});
    double best = std::numeric_limits<double>::infinity();
    for (const auto& candidate : all) {
      best = std::min(best, kemeny_score(candidate, inputs));
    }
    CHECK(kemeny_score(consensus_ranking(inputs), inputs) ==
          doctest::Approx(best).epsilon(1e-9));
  }
}
