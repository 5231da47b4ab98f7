#pragma once

#include <numeric>
#include <vector>

namespace mcf::detail {

// Disjoint sets tracking how many end vertices each class holds.
class UnionFind {
 public:
  explicit UnionFind(int n = 0) : parent_(n), ends_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // False when x and y were already joined.
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent_[y] = x;
    ends_[x] += ends_[y];
    return true;
  }
  void mark_end(int x) { ++ends_[find(x)]; }
  int ends(int x) { return ends_[find(x)]; }

 private:
  std::vector<int> parent_;
  std::vector<int> ends_;
};

}  // namespace mcf::detail
