#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <unordered_map>
#include <vector>

#include "udg/geometry.hpp"
#include "udg/grid.hpp"
#include "udg/random.hpp"

namespace udg {

// Boundary margins baked into every generated instance. The closed distance
// predicate is evaluated in plain doubles, so instances keep every pairwise
// squared distance at least this far from 1 (and from 0).
constexpr double kUnitMarginSq = 1e-7;
constexpr double kDuplicateSq = 1e-9;

enum class GenFamily { uniform_square, clustered_bounded_k, convex_circle };

struct GenSpec {
  GenFamily family = GenFamily::uniform_square;
  std::size_t n = 1;
  double param = 1.0;     // square side | cluster separation | circle radius
  std::size_t k_max = 8;  // clustered_bounded_k only
  std::uint64_t seed = 0;
};

inline std::string family_name(GenFamily f) {
  switch (f) {
    case GenFamily::uniform_square: return "uniform_square";
    case GenFamily::clustered_bounded_k: return "clustered_bounded_k";
    case GenFamily::convex_circle: return "convex_circle";
  }
  return "?";
}

inline bool parse_family(const std::string& s, GenFamily& out) {
  if (s == "uniform" || s == "uniform_square") {
    out = GenFamily::uniform_square;
  } else if (s == "bounded_k" || s == "clustered_bounded_k") {
    out = GenFamily::clustered_bounded_k;
  } else if (s == "convex" || s == "convex_circle") {
    out = GenFamily::convex_circle;
  } else {
    return false;
  }
  return true;
}

namespace detail {

inline bool margin_ok(const Point& a, const Point& b) {
  const double d2 = dist_sq(a, b);
  return d2 >= kDuplicateSq && std::abs(d2 - 1.0) >= kUnitMarginSq;
}

// Margin screening over a cell hash; only points within ~1.1 can violate
// either margin band, and those always sit in the surrounding 5x5 block.
struct MarginGrid {
  std::unordered_map<CellKey, std::vector<Point>, CellKeyHash> cells;

  bool admissible(const Point& p) const {
    const CellKey key = cell_key_for(p);
    for (std::int64_t dx = -3; dx <= 3; ++dx) {
      for (std::int64_t dy = -3; dy <= 3; ++dy) {
        auto it = cells.find({key.ix + dx, key.iy + dy});
        if (it == cells.end()) continue;
        for (const Point& q : it->second) {
          if (!margin_ok(p, q)) return false;
        }
      }
    }
    return true;
  }

  void insert(const Point& p) { cells[cell_key_for(p)].push_back(p); }
};

}  // namespace detail

/// n i.i.d. uniform points in [0, side]^2, resampled until the margin rules
/// hold against all previously placed points.
inline PointSet gen_uniform(std::size_t n, double side, std::uint64_t seed) {
  if (n < 1) throw InputError("gen_uniform: n must be at least 1");
  if (!(side > 0.0)) throw InputError("gen_uniform: side must be positive");
  Rng rng(seed);
  PointSet ps;
  ps.reserve(n);
  detail::MarginGrid grid;
  std::size_t resamples = 0;
  while (ps.size() < n) {
    Point p{uniform_in(rng, 0.0, side), uniform_in(rng, 0.0, side)};
    if (!grid.admissible(p)) {
      if (++resamples > 10000) {
        throw GenerationError("gen_uniform: margin unsatisfiable");
      }
      continue;
    }
    grid.insert(p);
    ps.push_back(p);
  }
  return ps;
}

/// Clustered family with known maximum clique size: ceil(n / k_max) cluster
/// centers pairwise at least `separation` apart, each cluster at most k_max
/// points inside a radius-0.4 disk. Intra-cluster distances stay below 0.8 and
/// inter-cluster distances above separation - 0.8 > 1.2, so the clusters are
/// exactly the connected components and K equals the largest cluster size.
inline PointSet gen_bounded_k(std::size_t n, std::size_t k_max,
                              double separation, std::uint64_t seed) {
  if (n < 1) throw InputError("gen_bounded_k: n must be at least 1");
  if (k_max < 1) throw InputError("gen_bounded_k: k_max must be at least 1");
  if (!(separation > 2.0)) {
    throw InputError("gen_bounded_k: separation must exceed 2");
  }
  Rng rng(seed);
  const std::size_t clusters = (n + k_max - 1) / k_max;
  const std::size_t per_row =
      static_cast<std::size_t>(std::ceil(std::sqrt(double(clusters))));

  // jittered lattice: spacing 1.25*sep with per-coordinate jitter <= 0.08*sep
  // keeps pairwise center distances >= 1.02*sep
  std::vector<Point> centers;
  centers.reserve(clusters);
  for (std::size_t c = 0; c < clusters; ++c) {
    const double cx = double(c % per_row) * 1.25 * separation +
                      uniform_in(rng, 0.0, 0.08 * separation);
    const double cy = double(c / per_row) * 1.25 * separation +
                      uniform_in(rng, 0.0, 0.08 * separation);
    centers.push_back({cx, cy});
  }

  PointSet ps;
  ps.reserve(n);
  std::size_t resamples = 0;
  for (std::size_t c = 0; c < clusters && ps.size() < n; ++c) {
    std::vector<Point> cluster;
    while (cluster.size() < k_max && ps.size() + cluster.size() < n) {
      const double r = 0.4 * std::sqrt(uniform01(rng));
      const double a = uniform_in(rng, 0.0, 2.0 * std::numbers::pi);
      Point p{centers[c].x + r * std::cos(a), centers[c].y + r * std::sin(a)};
      bool ok = true;
      for (const Point& q : cluster) {
        if (dist_sq(p, q) < kDuplicateSq) {  // near-1 distances cannot occur
          ok = false;                        // inside a radius-0.4 disk
          break;
        }
      }
      if (!ok) {
        if (++resamples > 10000) {
          throw GenerationError("gen_bounded_k: margin unsatisfiable");
        }
        continue;
      }
      cluster.push_back(p);
    }
    ps.insert(ps.end(), cluster.begin(), cluster.end());
  }
  return ps;
}

/// n points at sorted random angles on a circle, nudged radially inward by at
/// most radius/1000 (and by less than an eighth of the smallest neighbor-chord
/// clearance, which keeps the set strictly convex).
///
/// Margin repair happens per angle: offending draws are replaced rather than
/// the whole instance rejected. At a few hundred points some pair of uniform
/// angles lands inside the duplicate band on almost every draw, so
/// whole-instance rejection would never terminate there.
inline PointSet gen_convex(std::size_t n, double radius, std::uint64_t seed) {
  if (n < 3) throw InputError("gen_convex: n must be at least 3");
  if (!(radius > 0.0)) throw InputError("gen_convex: radius must be positive");
  Rng rng(seed);
  std::size_t resamples = 0;

  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<double> angles(n);
    for (double& a : angles) a = uniform_in(rng, 0.0, 2.0 * std::numbers::pi);

    // redraw angles until the unjittered chords clear the margin bands with
    // room to spare (the inward nudge can still move chords slightly)
    while (true) {
      std::sort(angles.begin(), angles.end());
      std::vector<char> redraw(n, 0);
      bool any = false;
      for (std::size_t i = 0; i < n; ++i) {
        const Point pi{radius * std::cos(angles[i]),
                       radius * std::sin(angles[i])};
        for (std::size_t j = i + 1; j < n; ++j) {
          const Point pj{radius * std::cos(angles[j]),
                         radius * std::sin(angles[j])};
          const double d2 = dist_sq(pi, pj);
          if (d2 < 4.0 * kDuplicateSq ||
              std::abs(d2 - 1.0) < 4.0 * kUnitMarginSq) {
            redraw[j] = 1;
            any = true;
          }
        }
      }
      if (!any) break;
      for (std::size_t j = 0; j < n; ++j) {
        if (!redraw[j]) continue;
        if (++resamples > 10000) {
          throw GenerationError("gen_convex: margin unsatisfiable");
        }
        angles[j] = uniform_in(rng, 0.0, 2.0 * std::numbers::pi);
      }
    }

    PointSet on_circle(n);
    for (std::size_t i = 0; i < n; ++i) {
      on_circle[i] = {radius * std::cos(angles[i]),
                      radius * std::sin(angles[i])};
    }
    double clearance = radius;
    for (std::size_t i = 0; i < n; ++i) {
      const Point& a = on_circle[(i + n - 1) % n];
      const Point& b = on_circle[i];
      const Point& c = on_circle[(i + 1) % n];
      const double chord = std::sqrt(dist_sq(a, c));
      if (chord == 0.0) {
        clearance = 0.0;
        break;
      }
      clearance = std::min(clearance, std::abs(cross(a, c, b)) / chord);
    }
    if (clearance <= 0.0) continue;
    const double jitter_cap = std::min(radius * 1e-3, clearance / 8.0);

    PointSet ps(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double r = radius - jitter_cap * uniform01(rng);
      ps[i] = {r * std::cos(angles[i]), r * std::sin(angles[i])};
    }

    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!detail::margin_ok(ps[i], ps[j])) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    ConvexityCheck cc = check_convex_position(ps);
    if (!cc.convex || cc.has_collinear) continue;
    return ps;
  }
  throw GenerationError("gen_convex: no admissible draw after 64 attempts");
}

inline PointSet generate(const GenSpec& spec) {
  switch (spec.family) {
    case GenFamily::uniform_square:
      return gen_uniform(spec.n, spec.param, spec.seed);
    case GenFamily::clustered_bounded_k:
      return gen_bounded_k(spec.n, spec.k_max, spec.param, spec.seed);
    case GenFamily::convex_circle:
      return gen_convex(spec.n, spec.param, spec.seed);
  }
  throw InputError("generate: unknown family");
}

}  // namespace udg
