#pragma once

#include <span>
#include <vector>

#include "udg/cobipartite.hpp"
#include "udg/geometry.hpp"

namespace udg {

/// Lens of an edge (p, q): points r with |rp| <= |pq| and |rq| <= |pq|.
/// Contains p and q themselves.
struct Lens {
  std::size_t p = 0;
  std::size_t q = 0;
  std::vector<std::size_t> members;
};

/// Lens membership over a subset of ids (the whole set by default).
inline Lens lens_points(const PointSet& ps, std::span<const std::size_t> ids,
                        std::size_t p, std::size_t q) {
  if (p >= ps.size() || q >= ps.size() || p == q) {
    throw InputError("lens_points: invalid edge endpoints");
  }
  const double d2 = dist_sq(ps[p], ps[q]);
  if (d2 > 1.0) throw InputError("lens_points: |pq| exceeds 1");
  Lens lens{p, q, {}};
  for (std::size_t r : ids) {
    if (dist_sq(ps[r], ps[p]) <= d2 && dist_sq(ps[r], ps[q]) <= d2) {
      lens.members.push_back(r);
    }
  }
  return lens;
}

inline Lens lens_points(const PointSet& ps, std::size_t p, std::size_t q) {
  std::vector<std::size_t> all(ps.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return lens_points(ps, all, p, q);
}

/// Splits lens members by the line through (p, q): side_a takes points on or
/// to the left of the directed line p->q, side_b the rest. Each closed half
/// of a lens has diameter |pq| <= 1, so both sides are cliques.
inline CobipartiteInstance lens_to_cobipartite(const PointSet& ps,
                                               const Lens& lens) {
  std::vector<std::size_t> side_a, side_b;
  for (std::size_t r : lens.members) {
    if (cross(ps[lens.p], ps[lens.q], ps[r]) >= 0.0) {
      side_a.push_back(r);
    } else {
      side_b.push_back(r);
    }
  }
  return make_cobipartite(ps, std::move(side_a), std::move(side_b));
}

/// Maximum clique over a subset of ids by lens enumeration: for every edge
/// (p, q) of the subset, solve the cobipartite subgraph inside L(p, q). Exact
/// because the farthest pair of any clique spans a lens containing it.
///
/// `target` > 0 turns it into a decision helper: the scan stops at the first
/// clique of at least `target` points.
inline CliqueResult max_clique_lens_baseline(const PointSet& ps,
                                             std::span<const std::size_t> ids,
                                             std::size_t target = 0) {
  CliqueResult best;
  best.algorithm = "lens-baseline";
  if (ids.empty()) return best;

  std::vector<std::size_t> sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  best.indices = {sorted.front()};  // edgeless fallback: smallest id

  for (std::size_t a = 0; a < sorted.size(); ++a) {
    for (std::size_t b = a + 1; b < sorted.size(); ++b) {
      if (target != 0 && best.size() >= target) return best;
      const std::size_t p = sorted[a], q = sorted[b];
      if (!dist_le_one(ps[p], ps[q])) continue;
      Lens lens = lens_points(ps, sorted, p, q);
      CliqueResult r = max_clique_cobipartite(lens_to_cobipartite(ps, lens));
      if (r.size() > best.size()) best.indices = std::move(r.indices);
    }
  }
  return best;
}

/// Whole-set baseline solver (Clark-Colbourn-Johnson style enumeration).
inline CliqueResult max_clique_lens_baseline(const PointSet& ps) {
  validate_point_set(ps);
  std::vector<std::size_t> all(ps.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  CliqueResult r = max_clique_lens_baseline(ps, all);
  return make_clique_result(ps, std::move(r.indices), "lens-baseline");
}

}  // namespace udg
