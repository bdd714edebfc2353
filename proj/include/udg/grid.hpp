#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "udg/geometry.hpp"

namespace udg {

/// Key of the side-1/2 axis-parallel cell containing a point. All points of a
/// cell are pairwise closer than 1, so each bucket is a clique.
struct CellKey {
  std::int64_t ix = 0;
  std::int64_t iy = 0;

  friend bool operator==(const CellKey&, const CellKey&) = default;
  friend bool operator<(const CellKey& a, const CellKey& b) {
    return a.ix != b.ix ? a.ix < b.ix : a.iy < b.iy;
  }
};

inline CellKey cell_key_for(const Point& p) {
  return {static_cast<std::int64_t>(std::floor(p.x / 0.5)),
          static_cast<std::int64_t>(std::floor(p.y / 0.5))};
}

struct CellKeyHash {
  std::size_t operator()(const CellKey& k) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(k.ix) * 0x9e3779b97f4a7c15ULL;
    h ^= static_cast<std::uint64_t>(k.iy) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

/// Immutable bucket map over side-1/2 cells. Lookups go through the hash map;
/// iteration uses a sorted key list so reported cell order is deterministic.
class GridIndex {
 public:
  GridIndex() = default;

  const std::vector<std::size_t>* bucket(CellKey key) const {
    auto it = cells_.find(key);
    return it == cells_.end() ? nullptr : &it->second;
  }

  bool contains(CellKey key) const { return cells_.count(key) != 0; }

  /// Present cell keys in ascending (ix, iy) order.
  const std::vector<CellKey>& keys() const { return sorted_keys_; }

  std::size_t cell_count() const { return cells_.size(); }
  std::size_t point_count() const { return n_; }

  friend GridIndex build_grid(const PointSet& ps);

 private:
  std::unordered_map<CellKey, std::vector<std::size_t>, CellKeyHash> cells_;
  std::vector<CellKey> sorted_keys_;
  std::size_t n_ = 0;
};

inline GridIndex build_grid(const PointSet& ps) {
  GridIndex g;
  g.n_ = ps.size();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (!std::isfinite(ps[i].x) || !std::isfinite(ps[i].y)) {
      throw InputError("build_grid: non-finite coordinate at id " +
                       std::to_string(i));
    }
    g.cells_[cell_key_for(ps[i])].push_back(i);  // ids arrive in order, so
  }                                              // buckets stay sorted
  g.sorted_keys_.reserve(g.cells_.size());
  for (const auto& [key, bucket] : g.cells_) g.sorted_keys_.push_back(key);
  std::sort(g.sorted_keys_.begin(), g.sorted_keys_.end());
  return g;
}

/// N(C): the 5x5 block of keys around `key`. A unit disk centered anywhere in
/// a side-1/2 cell stays inside this block, and each cell is a neighbor of at
/// most 25 cells.
inline std::vector<CellKey> neighbors(CellKey key) {
  std::vector<CellKey> out;
  out.reserve(25);
  for (std::int64_t dx = -2; dx <= 2; ++dx) {
    for (std::int64_t dy = -2; dy <= 2; ++dy) {
      out.push_back({key.ix + dx, key.iy + dy});
    }
  }
  return out;
}

/// N(C) restricted to cells present in the grid.
inline std::vector<CellKey> neighbors(const GridIndex& g, CellKey key) {
  std::vector<CellKey> out;
  for (const CellKey& k : neighbors(key)) {
    if (g.contains(k)) out.push_back(k);
  }
  return out;
}

/// P_C: union of the buckets over N(C), sorted. Buckets are disjoint so no
/// dedup is needed.
inline std::vector<std::size_t> union_neighborhood(const GridIndex& g,
                                                   CellKey key) {
  if (!g.contains(key)) {
    throw InputError("union_neighborhood: cell key not present in grid");
  }
  std::vector<std::size_t> out;
  for (const CellKey& k : neighbors(g, key)) {
    const auto* b = g.bucket(k);
    out.insert(out.end(), b->begin(), b->end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// |P_C| without materializing the union.
inline std::size_t union_neighborhood_size(const GridIndex& g, CellKey key) {
  std::size_t total = 0;
  for (std::int64_t dx = -2; dx <= 2; ++dx) {
    for (std::int64_t dy = -2; dy <= 2; ++dy) {
      const auto* b = g.bucket({key.ix + dx, key.iy + dy});
      if (b) total += b->size();
    }
  }
  return total;
}

}  // namespace udg
