#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "udg/geometry.hpp"

namespace udg {

namespace detail {

struct BronKerbosch {
  std::vector<std::uint64_t> adj;
  std::vector<std::size_t> current, best;

  explicit BronKerbosch(const PointSet& ps) : adj(ps.size(), 0) {
    for (std::size_t i = 0; i < ps.size(); ++i) {
      for (std::size_t j = i + 1; j < ps.size(); ++j) {
        if (dist_le_one(ps[i], ps[j])) {
          adj[i] |= std::uint64_t{1} << j;
          adj[j] |= std::uint64_t{1} << i;
        }
      }
    }
  }

  void consider() {
    std::vector<std::size_t> cand = current;
    std::sort(cand.begin(), cand.end());
    if (cand.size() > best.size() ||
        (cand.size() == best.size() && cand < best)) {
      best = std::move(cand);
    }
  }

  void expand(std::uint64_t p, std::uint64_t x) {
    if (p == 0 && x == 0) {
      consider();
      return;
    }
    // cannot beat or tie the incumbent
    if (current.size() + static_cast<std::size_t>(std::popcount(p)) <
        best.size()) {
      return;
    }
    // pivot: vertex of P|X with most neighbors in P
    std::uint64_t px = p | x;
    std::size_t pivot = 0;
    int pivot_deg = -1;
    for (std::uint64_t m = px; m != 0; m &= m - 1) {
      std::size_t v = static_cast<std::size_t>(std::countr_zero(m));
      int deg = std::popcount(p & adj[v]);
      if (deg > pivot_deg) {
        pivot_deg = deg;
        pivot = v;
      }
    }
    std::uint64_t ext = p & ~adj[pivot];
    for (std::uint64_t m = ext; m != 0; m &= m - 1) {
      std::size_t v = static_cast<std::size_t>(std::countr_zero(m));
      std::uint64_t bit = std::uint64_t{1} << v;
      current.push_back(v);
      expand(p & adj[v], x & adj[v]);
      current.pop_back();
      p &= ~bit;
      x |= bit;
    }
  }
};

}  // namespace detail

/// Exact maximum clique by Bron-Kerbosch with pivoting over bitset adjacency.
/// Test oracle only; enforced to n <= 64. Ties resolve to the
/// lexicographically smallest index set.
inline CliqueResult brute_force_max_clique(const PointSet& ps) {
  if (ps.size() > 64) {
    throw InputError("brute_force_max_clique: limited to 64 points");
  }
  detail::BronKerbosch bk(ps);
  if (!ps.empty()) {
    std::uint64_t all = ps.size() == 64 ? ~std::uint64_t{0}
                                        : (std::uint64_t{1} << ps.size()) - 1;
    bk.expand(all, 0);
  }
  return make_clique_result(ps, std::move(bk.best), "brute-force");
}

/// Largest clique that contains point p: brute force over the neighborhood of
/// p, plus p itself.
inline CliqueResult max_clique_containing(const PointSet& ps, std::size_t p) {
  if (ps.size() > 64) {
    throw InputError("max_clique_containing: limited to 64 points");
  }
  if (p >= ps.size()) throw InputError("max_clique_containing: id out of range");
  PointSet hood;
  std::vector<std::size_t> to_orig;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i != p && dist_le_one(ps[i], ps[p])) {
      hood.push_back(ps[i]);
      to_orig.push_back(i);
    }
  }
  CliqueResult sub = brute_force_max_clique(hood);
  std::vector<std::size_t> ids;
  ids.reserve(sub.size() + 1);
  for (std::size_t i : sub.indices) ids.push_back(to_orig[i]);
  ids.push_back(p);
  return make_clique_result(ps, std::move(ids), "brute-force-containing");
}

}  // namespace udg
