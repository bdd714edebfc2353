#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "udg/errors.hpp"
#include "udg/random.hpp"

namespace udg {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Point ids are positions in the vector.
using PointSet = std::vector<Point>;

inline double dist_sq(const Point& p, const Point& q) {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  return dx * dx + dy * dy;
}

/// Unit-disk adjacency. Closed comparison on the squared distance in double
/// precision; no square root, no epsilon. Inputs whose pairwise distances sit
/// within ~1e-7 of 1 are outside the supported domain (see generators).
inline bool dist_le_one(const Point& p, const Point& q) {
  return dist_sq(p, q) <= 1.0;
}

/// Twice the signed area of triangle (a, b, c); > 0 for a left turn.
inline double cross(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

/// True iff every pair in `ids` is within unit distance. Vacuous for size <= 1.
inline bool is_clique(const PointSet& ps, std::span<const std::size_t> ids) {
  for (std::size_t id : ids) {
    if (id >= ps.size()) throw InputError("is_clique: point id out of range");
  }
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (!dist_le_one(ps[ids[i]], ps[ids[j]])) return false;
    }
  }
  return true;
}

inline bool is_clique(const PointSet& ps, const std::vector<std::size_t>& ids) {
  return is_clique(ps, std::span<const std::size_t>(ids));
}

struct CliqueResult {
  std::vector<std::size_t> indices;  // sorted, distinct
  std::string algorithm;

  std::size_t size() const { return indices.size(); }
};

/// Builds a verified result. Throws ContractError if the ids do not form a
/// clique: every solver is expected to hand over a genuine clique, so a
/// failure here is a solver bug, not bad input.
inline CliqueResult make_clique_result(const PointSet& ps,
                                       std::vector<std::size_t> ids,
                                       std::string algorithm) {
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw ContractError("clique result contains duplicate ids");
  }
  if (!ids.empty() && ids.back() >= ps.size()) {
    throw ContractError("clique result id out of range");
  }
  if (!is_clique(ps, ids)) {
    throw ContractError("clique result failed pairwise verification (" +
                        algorithm + ")");
  }
  return CliqueResult{std::move(ids), std::move(algorithm)};
}

/// Solver entry validation: finite coordinates, no duplicate points.
inline void validate_point_set(const PointSet& ps) {
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (!std::isfinite(ps[i].x) || !std::isfinite(ps[i].y)) {
      throw InputError("point " + std::to_string(i) +
                       " has a non-finite coordinate");
    }
  }
  std::vector<std::size_t> order(ps.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return ps[a].x != ps[b].x ? ps[a].x < ps[b].x : ps[a].y < ps[b].y;
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (ps[order[i - 1]] == ps[order[i]]) {
      throw InputError("duplicate point at ids " +
                       std::to_string(order[i - 1]) + " and " +
                       std::to_string(order[i]));
    }
  }
}

/// Indices of the upper convex hull in strictly increasing x, endpoints
/// included. Collinear hull points are kept in order. Requires pairwise
/// distinct x-coordinates (callers normalize first).
inline std::vector<std::size_t> upper_hull(const PointSet& ps) {
  std::vector<std::size_t> order(ps.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return ps[a].x < ps[b].x; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (ps[order[i - 1]].x == ps[order[i]].x) {
      throw InputError("upper_hull requires pairwise distinct x-coordinates");
    }
  }
  std::vector<std::size_t> hull;
  for (std::size_t id : order) {
    // pop while the middle point makes a strict left turn
    while (hull.size() >= 2 &&
           cross(ps[hull[hull.size() - 2]], ps[hull.back()], ps[id]) > 0.0) {
      hull.pop_back();
    }
    hull.push_back(id);
  }
  return hull;
}

struct ConvexityCheck {
  bool convex = false;         // every point lies on the hull boundary
  bool has_collinear = false;  // some boundary triple is exactly collinear
};

/// Checks whether every point is on the convex hull boundary. Collinear
/// boundary points count as hull vertices but are flagged so callers can warn:
/// the sweep's structural guarantees assume general position.
inline ConvexityCheck check_convex_position(const PointSet& ps) {
  const std::size_t n = ps.size();
  if (n <= 2) return {true, false};
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return ps[a].x != ps[b].x ? ps[a].x < ps[b].x : ps[a].y < ps[b].y;
  });

  bool collinear = false;
  auto chain = [&](bool upper) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t id = order[upper ? k : n - 1 - k];
      while (out.size() >= 2) {
        double c = cross(ps[out[out.size() - 2]], ps[out.back()], ps[id]);
        if (c == 0.0) collinear = true;
        if (c > 0.0) {
          out.pop_back();
        } else {
          break;
        }
      }
      out.push_back(id);
    }
    return out;
  };

  std::vector<char> on_hull(n, 0);
  for (std::size_t id : chain(true)) on_hull[id] = 1;
  for (std::size_t id : chain(false)) on_hull[id] = 1;
  bool convex = std::all_of(on_hull.begin(), on_hull.end(),
                            [](char c) { return c != 0; });
  return {convex, collinear};
}

struct NormalizedSet {
  PointSet points;                       // filtered and rotated copy
  std::vector<std::size_t> to_original;  // result id -> input id
  std::size_t anchor = 0;                // anchor id within `points`
  double angle = 0.0;                    // rotation applied, radians
};

namespace detail {

inline PointSet rotate_about(const PointSet& ps, const Point& c, double theta) {
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  PointSet out;
  out.reserve(ps.size());
  for (const Point& p : ps) {
    const double dx = p.x - c.x;
    const double dy = p.y - c.y;
    out.push_back({c.x + ct * dx - st * dy, c.y + st * dx + ct * dy});
  }
  return out;
}

inline bool anchor_strictly_leftmost(const PointSet& ps, std::size_t anchor) {
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i != anchor && ps[i].x <= ps[anchor].x) return false;
  }
  return true;
}

inline bool coords_pairwise_distinct(const PointSet& ps) {
  std::vector<double> v(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) v[i] = ps[i].x;
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) return false;
  for (std::size_t i = 0; i < ps.size(); ++i) v[i] = ps[i].y;
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

}  // namespace detail

/// Restricts to the points within unit distance of the anchor and rotates the
/// subset rigidly about the anchor so that (a) the anchor is strictly leftmost
/// and (b) all x- and all y-coordinates are pairwise distinct.
///
/// Angle zero is tried first so already-normalized inputs map to themselves.
/// Otherwise angles are drawn (seeded) from the arc in which the anchor is
/// extreme; the anchor is a hull vertex of any convex-position subset, so the
/// arc is nonempty there. Draws are re-verified and retried up to 64 times.
inline NormalizedSet normalize_for_anchor(const PointSet& ps,
                                          std::size_t anchor,
                                          std::uint64_t seed) {
  if (anchor >= ps.size()) throw InputError("normalize: anchor out of range");

  NormalizedSet result;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (dist_le_one(ps[i], ps[anchor])) {
      if (i == anchor) result.anchor = result.to_original.size();
      result.to_original.push_back(i);
    }
  }
  PointSet kept;
  kept.reserve(result.to_original.size());
  for (std::size_t id : result.to_original) kept.push_back(ps[id]);
  const Point a = ps[anchor];

  if (kept.size() == 1) {
    result.points = std::move(kept);
    return result;
  }

  auto accept = [&](double theta) -> bool {
    PointSet rotated = detail::rotate_about(kept, a, theta);
    if (!detail::anchor_strictly_leftmost(rotated, result.anchor)) return false;
    if (!detail::coords_pairwise_distinct(rotated)) return false;
    result.points = std::move(rotated);
    result.angle = theta;
    return true;
  };

  if (accept(0.0)) return result;

  // Feasible rotation arc: directions from the anchor to the other points,
  // all to land in (-pi/2, pi/2).
  std::vector<double> dirs;
  dirs.reserve(kept.size() - 1);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (i == result.anchor) continue;
    dirs.push_back(std::atan2(kept[i].y - a.y, kept[i].x - a.x));
  }
  std::sort(dirs.begin(), dirs.end());
  double max_gap = 2.0 * std::numbers::pi - (dirs.back() - dirs.front());
  std::size_t gap_after = dirs.size() - 1;
  for (std::size_t i = 0; i + 1 < dirs.size(); ++i) {
    double gap = dirs[i + 1] - dirs[i];
    if (gap > max_gap) {
      max_gap = gap;
      gap_after = i;
    }
  }
  const double span = 2.0 * std::numbers::pi - max_gap;
  if (!(span < std::numbers::pi)) {
    throw InputError(
        "normalize: anchor cannot be made strictly leftmost (directions to "
        "the other points span a half-plane or more)");
  }
  // Occupied arc runs from alpha over `span`; rotate it into (-pi/2, pi/2).
  const double alpha =
      gap_after + 1 < dirs.size() ? dirs[gap_after + 1] : dirs.front();
  const double lo = -std::numbers::pi / 2.0 - alpha;
  const double hi = std::numbers::pi / 2.0 - (alpha + span);

  Rng rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    double theta = uniform_in(rng, lo, hi);
    theta = std::remainder(theta, 2.0 * std::numbers::pi);
    if (accept(theta)) return result;
  }
  throw InputError("normalize: no admissible rotation found after 64 draws");
}

}  // namespace udg
