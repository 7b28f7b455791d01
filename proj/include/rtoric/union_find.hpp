#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace rtoric {

class DisjointSets
{
public:
  explicit DisjointSets(std::size_t n)
    : parent_(n)
    , size_(n, 1)
    , components_(n)
  {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x)
  {
    std::size_t root = x;
    while (parent_[root] != root) { root = parent_[root]; }
    while (parent_[x] != root) {
      std::size_t const next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  /// Returns true if x and y were in different sets.
  bool unite(std::size_t x, std::size_t y)
  {
    x = find(x);
    y = find(y);
    if (x == y) { return false; }
    if (size_[x] < size_[y]) { std::swap(x, y); }
    parent_[y] = x;
    size_[x] += size_[y];
    --components_;
    return true;
  }

  std::size_t components() const { return components_; }
  std::size_t size_of(std::size_t x) { return size_[find(x)]; }

private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t components_;
};

} // namespace rtoric
