#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace hyped {

// Union-by-rank with full path compression.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }

  std::uint32_t find(std::uint32_t x) {
    std::uint32_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {  // point every traversed element at the root
      std::uint32_t next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  bool same(std::uint32_t x, std::uint32_t y) { return find(x) == find(y); }

  void unite(std::uint32_t x, std::uint32_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (rank_[x] < rank_[y]) {
      parent_[x] = y;
    } else if (rank_[x] > rank_[y]) {
      parent_[y] = x;
    } else {
      parent_[y] = x;
      ++rank_[x];
    }
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> rank_;
};

}  // namespace hyped
