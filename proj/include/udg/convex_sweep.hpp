#pragma once

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <utility>
#include <vector>

#include "udg/cobipartite.hpp"
#include "udg/geometry.hpp"

namespace udg {

/// Partition of the right half of the anchor's unit disk by the unit disk
/// centered at q* = (x(anchor), y(anchor) - 1). R2 points, once inside the
/// lower working set, never leave it again.
enum class RegionTag { R1, R2 };

inline RegionTag classify_region(const Point& p, const Point& anchor) {
  const Point qstar{anchor.x, anchor.y - 1.0};
  return dist_le_one(p, qstar) ? RegionTag::R1 : RegionTag::R2;
}

struct UpdateBatch {
  std::vector<std::size_t> insertions;
  std::vector<std::size_t> deletions;
};

/// Bookkeeping for the left-to-right scan over the upper hull.
///
/// Ids below are positions into `norm`, the filtered-and-rotated working copy.
/// The rotation is used only for ordering, hull structure and region tags;
/// every distance predicate is evaluated on `base`, the caller's frame, so
/// instances with pairwise distances exactly 1 behave identically before and
/// after normalization.
struct SweepState {
  PointSet base;                      // caller frame; distances live here
  PointSet norm;                      // rotated subset; ordering lives here
  std::vector<std::size_t> to_base;   // norm id -> base id
  std::size_t anchor = 0;             // norm id of the anchor (== pu.front())
  std::vector<std::size_t> pu;        // upper hull, left to right
  std::vector<std::size_t> pl;        // remaining ids, ascending
  std::size_t h = 0;                  // position in pu with maximum y
  std::size_t i = 0;                  // current sweep position in pu
  std::vector<std::size_t> su;        // S_u(i), ascending norm ids
  std::vector<std::size_t> slp;       // S'_l(i), ascending norm ids
  std::vector<RegionTag> region;      // per norm id

  std::size_t t() const { return pu.size(); }

  bool adj(std::size_t a, std::size_t b) const {
    return dist_le_one(base[to_base[a]], base[to_base[b]]);
  }

  std::vector<std::size_t> to_base_ids(
      const std::vector<std::size_t>& ids) const {
    std::vector<std::size_t> out;
    out.reserve(ids.size());
    for (std::size_t id : ids) out.push_back(to_base[id]);
    return out;
  }
};

/// S_u(j) and S_l(j) recomputed directly: members left of or equal to p_j and
/// within unit distance of it, split by hull side. Both are cliques for
/// convex-position inputs.
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
target_sets(const SweepState& st, std::size_t j) {
  if (j >= st.t()) throw InputError("target_sets: position out of range");
  std::vector<std::size_t> su_j, sl_j;
  for (std::size_t m = 0; m <= j; ++m) {
    if (st.adj(st.pu[m], st.pu[j])) su_j.push_back(st.pu[m]);
  }
  std::sort(su_j.begin(), su_j.end());
  const double xj = st.norm[st.pu[j]].x;
  for (std::size_t id : st.pl) {
    if (st.norm[id].x <= xj && st.adj(id, st.pu[j])) sl_j.push_back(id);
  }
  return {std::move(su_j), std::move(sl_j)};
}

namespace detail {

/// Builds the sweep bookkeeping over an already-normalized ordering frame.
inline SweepState make_sweep_state(PointSet base, PointSet norm,
                                   std::vector<std::size_t> to_base,
                                   std::size_t anchor_norm) {
  SweepState st;
  st.base = std::move(base);
  st.norm = std::move(norm);
  st.to_base = std::move(to_base);
  st.anchor = anchor_norm;

  st.pu = upper_hull(st.norm);
  if (st.pu.front() != st.anchor) {
    throw ContractError("anchor is not leftmost after normalization");
  }
  std::vector<char> on_upper(st.norm.size(), 0);
  for (std::size_t id : st.pu) on_upper[id] = 1;
  for (std::size_t id = 0; id < st.norm.size(); ++id) {
    if (!on_upper[id]) st.pl.push_back(id);
  }

  st.h = 0;
  for (std::size_t m = 1; m < st.pu.size(); ++m) {
    if (st.norm[st.pu[m]].y > st.norm[st.pu[st.h]].y) st.h = m;
  }
  st.region.reserve(st.norm.size());
  for (const Point& p : st.norm) {
    st.region.push_back(classify_region(p, st.norm[st.anchor]));
  }

  st.i = 0;
  auto [su0, sl0] = target_sets(st, 0);
  st.su = std::move(su0);
  st.slp = std::move(sl0);  // anchor is strictly leftmost, so this is empty
  return st;
}

}  // namespace detail

/// Filters to the anchor's unit disk, normalizes, computes the hull order and
/// region tags, and positions the sweep at the anchor.
inline SweepState prepare_sweep(const PointSet& ps, std::size_t anchor,
                                std::uint64_t seed) {
  validate_point_set(ps);
  if (anchor >= ps.size()) throw InputError("prepare_sweep: anchor out of range");
  ConvexityCheck cc = check_convex_position(ps);
  if (!cc.convex) {
    throw InputError("prepare_sweep: input is not in convex position");
  }
  if (cc.has_collinear) {
    std::cerr << "udg: warning: collinear points on the hull; sweep "
                 "guarantees assume general position\n";
  }
  NormalizedSet n = normalize_for_anchor(ps, anchor, seed);
  return detail::make_sweep_state(ps, std::move(n.points),
                                  std::move(n.to_original), n.anchor);
}

namespace detail {

inline std::vector<std::size_t> sorted_minus(
    const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

inline std::vector<std::size_t> sorted_union(
    const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

}  // namespace detail

/// Moves the sweep from position i to i+1 and returns the applied updates.
///
/// Up to the hull apex both sets are recomputed outright. Past the apex the
/// lower set is maintained as the relaxed superset S'_l: the freshly inserted
/// points of S_l(i+1) evict any conflicting R1 members, while R2 members are
/// kept unconditionally. The relaxed set stays a clique and contains S_l(i+1),
/// and every point enters and leaves it O(1) times over the whole sweep.
inline UpdateBatch advance(SweepState& st) {
  if (st.i + 1 >= st.t()) {
    throw InputError("advance: sweep already at the last hull point");
  }
  const std::size_t j = st.i + 1;
  auto [su_j, sl_j] = target_sets(st, j);
  UpdateBatch batch;

  if (j <= st.h) {
    std::vector<std::size_t> old_all = detail::sorted_union(st.su, st.slp);
    std::vector<std::size_t> new_all = detail::sorted_union(su_j, sl_j);
    batch.insertions = detail::sorted_minus(new_all, old_all);
    batch.deletions = detail::sorted_minus(old_all, new_all);
    st.su = std::move(su_j);
    st.slp = std::move(sl_j);
  } else {
    std::vector<std::size_t> ins_u = detail::sorted_minus(su_j, st.su);
    std::vector<std::size_t> del_u = detail::sorted_minus(st.su, su_j);
    std::vector<std::size_t> ins_l = detail::sorted_minus(sl_j, st.slp);

    std::vector<std::size_t> cur = detail::sorted_union(st.slp, ins_l);
    std::vector<char> alive(cur.size(), 1);
    std::vector<std::size_t> del_l;
    for (std::size_t p : ins_l) {
      for (std::size_t idx = 0; idx < cur.size(); ++idx) {
        if (!alive[idx]) continue;
        if (st.region[cur[idx]] != RegionTag::R1) continue;
        if (!st.adj(p, cur[idx])) {
          alive[idx] = 0;
          del_l.push_back(cur[idx]);
        }
      }
    }
    std::sort(del_l.begin(), del_l.end());

    std::vector<std::size_t> new_slp;
    for (std::size_t idx = 0; idx < cur.size(); ++idx) {
      if (alive[idx]) new_slp.push_back(cur[idx]);
    }
    batch.insertions = detail::sorted_union(ins_u, ins_l);
    batch.deletions = detail::sorted_union(del_u, del_l);
    st.su = std::move(su_j);
    st.slp = std::move(new_slp);
  }

  st.i = j;
  UDG_CHECK(is_clique(st.base, st.to_base_ids(st.su)),
            "sweep upper set lost cliqueness");
  UDG_CHECK(is_clique(st.base, st.to_base_ids(st.slp)),
            "sweep lower set lost cliqueness");
  return batch;
}

struct SweepStats {
  std::size_t steps = 0;
  std::size_t total_insertions = 0;
  std::size_t total_deletions = 0;
  std::size_t max_point_insertions = 0;  // worst per-point count in one run
  std::size_t max_point_deletions = 0;
};

namespace detail {

inline void solve_position(const SweepState& st, CliqueResult& best) {
  CobipartiteInstance inst = make_cobipartite(
      st.base, st.to_base_ids(st.su), st.to_base_ids(st.slp));
  CliqueResult r = max_clique_cobipartite(inst);
  if (r.size() > best.size()) best.indices = std::move(r.indices);
}

inline void run_sweep(SweepState st, CliqueResult& best, SweepStats* stats) {
  std::vector<std::size_t> ins_count(st.norm.size(), 0);
  std::vector<std::size_t> del_count(st.norm.size(), 0);
  solve_position(st, best);
  while (st.i + 1 < st.t()) {
    UpdateBatch batch = advance(st);
    if (stats) {
      ++stats->steps;
      stats->total_insertions += batch.insertions.size();
      stats->total_deletions += batch.deletions.size();
      for (std::size_t id : batch.insertions) ++ins_count[id];
      for (std::size_t id : batch.deletions) ++del_count[id];
    }
    solve_position(st, best);
  }
  if (stats) {
    for (std::size_t c : ins_count) {
      stats->max_point_insertions = std::max(stats->max_point_insertions, c);
    }
    for (std::size_t c : del_count) {
      stats->max_point_deletions = std::max(stats->max_point_deletions, c);
    }
  }
}

}  // namespace detail

/// Maximum clique of a convex-position set, guaranteed at least as large as
/// any clique containing the anchor.
///
/// The rightmost point of that clique sits on either the upper or the lower
/// hull chain, so the sweep runs twice: once over the normalized frame and
/// once over its reflection about the horizontal axis. Both runs share one
/// normalization; the rightmost clique point is frame-dependent, and only
/// within a single frame does the two-chain case split stay exhaustive.
/// Distances are evaluated in the caller's frame throughout, so the reported
/// ids need no back-mapping.
inline CliqueResult max_clique_given_point(const PointSet& ps,
                                           std::size_t anchor,
                                           std::uint64_t seed,
                                           SweepStats* stats = nullptr) {
  validate_point_set(ps);
  if (anchor >= ps.size()) {
    throw InputError("max_clique_given_point: anchor out of range");
  }
  ConvexityCheck cc = check_convex_position(ps);
  if (!cc.convex) {
    throw InputError("max_clique_given_point: input is not in convex position");
  }
  if (cc.has_collinear) {
    std::cerr << "udg: warning: collinear points on the hull; sweep "
                 "guarantees assume general position\n";
  }
  NormalizedSet n = normalize_for_anchor(ps, anchor, seed);

  PointSet flipped = n.points;
  for (Point& p : flipped) p.y = -p.y;  // still normalized: x untouched

  CliqueResult best;
  detail::run_sweep(
      detail::make_sweep_state(ps, n.points, n.to_original, n.anchor), best,
      stats);
  detail::run_sweep(
      detail::make_sweep_state(ps, std::move(flipped),
                               std::move(n.to_original), n.anchor),
      best, stats);
  return make_clique_result(ps, std::move(best.indices), "convex-given");
}

}  // namespace udg
