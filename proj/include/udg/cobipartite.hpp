#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "udg/bipartite.hpp"
#include "udg/geometry.hpp"

namespace udg {

/// Two disjoint index sets whose union induces a cobipartite unit-disk
/// subgraph: each side is a clique, so the complement graph is bipartite.
struct CobipartiteInstance {
  const PointSet* ps = nullptr;
  std::vector<std::size_t> side_a;  // sorted ids
  std::vector<std::size_t> side_b;
};

inline CobipartiteInstance make_cobipartite(const PointSet& ps,
                                            std::vector<std::size_t> side_a,
                                            std::vector<std::size_t> side_b) {
  std::sort(side_a.begin(), side_a.end());
  std::sort(side_b.begin(), side_b.end());
  CobipartiteInstance inst{&ps, std::move(side_a), std::move(side_b)};
  UDG_CHECK(is_clique(ps, inst.side_a), "cobipartite side_a is not a clique");
  UDG_CHECK(is_clique(ps, inst.side_b), "cobipartite side_b is not a clique");
  std::vector<std::size_t> both;
  std::set_intersection(inst.side_a.begin(), inst.side_a.end(),
                        inst.side_b.begin(), inst.side_b.end(),
                        std::back_inserter(both));
  if (!both.empty()) throw ContractError("cobipartite sides overlap");
  return inst;
}

/// Complement graph restricted to cross pairs: edge (a, b) iff the two points
/// are NOT within unit distance. Intra-side complement edges cannot exist
/// because each side is a clique.
inline BipartiteGraph complement_bipartite(const CobipartiteInstance& inst) {
  const PointSet& ps = *inst.ps;
  BipartiteGraph g(inst.side_a.size(), inst.side_b.size());
  for (std::size_t i = 0; i < inst.side_a.size(); ++i) {
    for (std::size_t j = 0; j < inst.side_b.size(); ++j) {
      if (!dist_le_one(ps[inst.side_a[i]], ps[inst.side_b[j]])) {
        g.add_edge(i, j);
      }
    }
  }
  return g;
}

/// Maximum clique of the cobipartite subgraph: maximum independent set in the
/// complement, via Koenig's theorem over a maximum matching. The identity
/// |clique| = |A| + |B| - |matching| is checked on every call.
inline CliqueResult max_clique_cobipartite(const CobipartiteInstance& inst) {
  BipartiteGraph g = complement_bipartite(inst);
  Matching m = max_matching(g);
  auto [cover_l, cover_r] = min_vertex_cover(g, m);

  std::vector<char> in_cover_l(inst.side_a.size(), 0);
  std::vector<char> in_cover_r(inst.side_b.size(), 0);
  for (std::size_t u : cover_l) in_cover_l[u] = 1;
  for (std::size_t v : cover_r) in_cover_r[v] = 1;

  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < inst.side_a.size(); ++i) {
    if (!in_cover_l[i]) ids.push_back(inst.side_a[i]);
  }
  for (std::size_t j = 0; j < inst.side_b.size(); ++j) {
    if (!in_cover_r[j]) ids.push_back(inst.side_b[j]);
  }
  const std::size_t expected =
      inst.side_a.size() + inst.side_b.size() - m.size;
  if (ids.size() != expected) {
    throw ContractError("cobipartite solver: Koenig identity violated");
  }
  return make_clique_result(*inst.ps, std::move(ids), "cobipartite");
}

}  // namespace udg
