#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "udg/convex_sweep.hpp"
#include "udg/general.hpp"

namespace udg {

struct RandomizedConfig {
  double c = 3.0;  // repeat multiplier for the sampling branch
  std::uint64_t seed = 0;
  std::optional<std::size_t> threshold_override;  // test hook for branch forcing
};

/// Diagnostics for reporting; callers may ignore it.
struct ConvexSolveInfo {
  std::size_t threshold_k = 0;
  bool sampling_branch = false;
  std::size_t anchors_drawn = 0;
  std::size_t decide_calls = 0;
  SweepStats sweep;        // aggregated over sampling runs
  SearchTrace trace;       // populated on the exact branch
};

/// Randomized maximum clique for points in convex position.
///
/// A single decision probe at k0 = ceil(n^(6/7)) splits the work: below the
/// threshold the exact output-sensitive search finishes the job; at or above
/// it, ceil(c * n^(1/7) * ln n) anchors are sampled with replacement and the
/// anchored sweep runs per anchor. Any sampled anchor inside a maximum clique
/// yields the optimum, which happens with probability >= 1 - e^(-c ln n).
/// The returned set is a verified clique in every case.
inline CliqueResult max_clique_convex(const PointSet& ps,
                                      const RandomizedConfig& cfg,
                                      ConvexSolveInfo* info = nullptr) {
  validate_point_set(ps);
  if (ps.empty()) throw InputError("max_clique_convex: empty input");
  if (cfg.c <= 0.0) throw InputError("max_clique_convex: c must be positive");
  ConvexityCheck cc = check_convex_position(ps);
  if (!cc.convex) {
    throw InputError("max_clique_convex: input is not in convex position");
  }

  const std::size_t n = ps.size();
  std::size_t k0;
  if (cfg.threshold_override) {
    k0 = std::max<std::size_t>(1, *cfg.threshold_override);
  } else {
    k0 = static_cast<std::size_t>(
        std::ceil(std::pow(static_cast<double>(n), 6.0 / 7.0) - 1e-9));
    k0 = std::max<std::size_t>(1, k0);
  }
  if (info) info->threshold_k = k0;

  bool k0_reachable = false;
  if (k0 <= n) {
    const GridIndex g = build_grid(ps);
    k0_reachable = decide_clique(ps, g, k0).found;
    if (info) ++info->decide_calls;
  }

  if (!k0_reachable) {
    auto [result, trace] = max_clique_general(ps);
    if (info) {
      info->sampling_branch = false;
      info->trace = std::move(trace);
    }
    return make_clique_result(ps, std::move(result.indices),
                              "convex-randomized");
  }

  const double repeats = cfg.c *
                         std::pow(static_cast<double>(n), 1.0 / 7.0) *
                         std::log(static_cast<double>(n));
  const std::size_t r =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(repeats)));

  // one seeded stream, drawn up front, so results do not depend on how the
  // per-anchor runs are scheduled
  Rng rng(cfg.seed);
  std::vector<std::size_t> anchors(r);
  for (std::size_t i = 0; i < r; ++i) anchors[i] = uniform_index(rng, n);

  CliqueResult best;
  for (std::size_t i = 0; i < r; ++i) {
    const std::uint64_t run_seed = cfg.seed ^ (0x9e3779b97f4a7c15ULL * (i + 1));
    SweepStats run_stats;
    CliqueResult r_i = max_clique_given_point(ps, anchors[i], run_seed,
                                              info ? &run_stats : nullptr);
    if (info) {
      info->sweep.steps += run_stats.steps;
      info->sweep.total_insertions += run_stats.total_insertions;
      info->sweep.total_deletions += run_stats.total_deletions;
      info->sweep.max_point_insertions = std::max(
          info->sweep.max_point_insertions, run_stats.max_point_insertions);
      info->sweep.max_point_deletions = std::max(
          info->sweep.max_point_deletions, run_stats.max_point_deletions);
    }
    if (r_i.size() > best.size()) best = std::move(r_i);
  }
  if (info) {
    info->sampling_branch = true;
    info->anchors_drawn = r;
  }
  return make_clique_result(ps, std::move(best.indices), "convex-randomized");
}

}  // namespace udg
