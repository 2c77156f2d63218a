#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

namespace walklab {

/// Disjoint-set forest with union by size and path halving. Each set also
/// caches its size and the maximum of a per-element integer key (the
/// spanning-tree construction keys on vertex degree).
class DisjointSets {
  public:
    explicit DisjointSets(int n) : DisjointSets(std::vector<int>(static_cast<std::size_t>(n), 0)) {}

    explicit DisjointSets(std::vector<int> keys)
        : parent_(keys.size()), size_(keys.size(), 1), max_key_(std::move(keys)) {
        std::iota(parent_.begin(), parent_.end(), 0);
        components_ = static_cast<int>(parent_.size());
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool same(int a, int b) { return find(a) == find(b); }

    /// Returns false when a and b were already joined.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        if (size_[a] < size_[b]) {
            std::swap(a, b);
        }
        parent_[b] = a;
        size_[a] += size_[b];
        max_key_[a] = std::max(max_key_[a], max_key_[b]);
        --components_;
        return true;
    }

    int size(int x) { return size_[find(x)]; }
    int max_key(int x) { return max_key_[find(x)]; }
    int components() const { return components_; }
    int elements() const { return static_cast<int>(parent_.size()); }

  private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> max_key_;
    int components_ = 0;
};

} // namespace walklab
