#pragma once

#include <chrono>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "udg/grid.hpp"
#include "udg/lens.hpp"

namespace udg {

struct DecisionOutcome {
  bool found = false;
  std::optional<CliqueResult> witness;  // present iff found; size >= k
  std::size_t cells_solved = 0;         // cells whose subproblem ran
};

struct ProbeRecord {
  std::size_t k = 0;
  bool found = false;
  double elapsed_ms = 0.0;
};

struct SearchTrace {
  std::vector<ProbeRecord> probes;
  std::size_t final_k = 0;
};

/// Decides whether G(P) has a clique of size k and reports a witness.
///
/// First pass: any bucket with >= k points is itself a clique (cells have
/// side 1/2). Second pass: any clique of size k touching cell C lies inside
/// P_C, so solving the union neighborhoods of all cells with |P_C| >= k is
/// exhaustive. Cells are visited in sorted key order and the first witness
/// wins, so results are reproducible. Identical P_C unions are solved once.
inline DecisionOutcome decide_clique(const PointSet& ps, const GridIndex& g,
                                     std::size_t k) {
  if (k < 1) throw InputError("decide_clique: k must be at least 1");
  DecisionOutcome out;

  for (const CellKey& key : g.keys()) {
    const auto& bucket = *g.bucket(key);
    if (bucket.size() >= k) {
      std::vector<std::size_t> ids(bucket.begin(), bucket.begin() + k);
      out.found = true;
      out.witness = make_clique_result(ps, std::move(ids), "general");
      return out;
    }
  }

  // Dense inputs produce many cells sharing one neighborhood union; caching
  // by the union keeps repeated lens solves out of the probe loop.
  struct VecHash {
    std::size_t operator()(const std::vector<std::size_t>& v) const noexcept {
      std::size_t h = v.size();
      for (std::size_t x : v) h = h * 0x9e3779b97f4a7c15ULL + x + 1;
      return h;
    }
  };
  std::unordered_map<std::vector<std::size_t>, char, VecHash> seen;

  for (const CellKey& key : g.keys()) {
    if (union_neighborhood_size(g, key) < k) continue;
    std::vector<std::size_t> pc = union_neighborhood(g, key);
    if (seen.count(pc)) continue;  // a hit is always a failed size, else we
    ++out.cells_solved;            // would have returned already
    CliqueResult r = max_clique_lens_baseline(ps, pc, k);
    seen.emplace(std::move(pc), 1);
    if (r.size() >= k) {
      out.found = true;
      out.witness = make_clique_result(ps, std::move(r.indices), "general");
      return out;
    }
  }
  return out;
}

namespace detail {

inline ProbeRecord probe(const PointSet& ps, const GridIndex& g, std::size_t k,
                         std::optional<DecisionOutcome>* outcome) {
  if (k > ps.size()) {
    // no clique can exceed n; skip the decision entirely
    if (outcome) outcome->reset();
    return {k, false, 0.0};
  }
  auto t0 = std::chrono::steady_clock::now();
  DecisionOutcome d = decide_clique(ps, g, k);
  auto t1 = std::chrono::steady_clock::now();
  ProbeRecord rec{k, d.found,
                  std::chrono::duration<double, std::milli>(t1 - t0).count()};
  if (outcome) *outcome = std::move(d);
  return rec;
}

}  // namespace detail

/// Maximum clique via the output-sensitive search: exponential probing
/// k = 1, 2, 4, ... fixes an interval [k', 2k'] with success at k' and
/// failure at 2k', then binary search pins K. A final decision run at K
/// produces the reported witness. Probes above n fail without running.
inline std::pair<CliqueResult, SearchTrace> max_clique_general(
    const PointSet& ps) {
  validate_point_set(ps);
  if (ps.empty()) throw InputError("max_clique_general: empty input");
  const GridIndex g = build_grid(ps);
  SearchTrace trace;

  auto run = [&](std::size_t k, std::optional<DecisionOutcome>* d) {
    ProbeRecord rec = detail::probe(ps, g, k, d);
    trace.probes.push_back(rec);
    return rec.found;
  };

  std::size_t lo = 1;
  if (!run(lo, nullptr)) {
    throw ContractError("decision failed at k=1 on a nonempty input");
  }
  std::size_t hi = 2;
  while (run(hi, nullptr)) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (run(mid, nullptr)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  std::optional<DecisionOutcome> final_outcome;
  if (!run(lo, &final_outcome) || !final_outcome || !final_outcome->witness) {
    throw ContractError("decision at the established K produced no witness");
  }
  trace.final_k = lo;
  CliqueResult result = std::move(*final_outcome->witness);
  return {std::move(result), std::move(trace)};
}

}  // namespace udg
