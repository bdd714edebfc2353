#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "udg/errors.hpp"

namespace udg {

/// Bipartite graph with 0-based left/right vertex ids.
struct BipartiteGraph {
  std::size_t left_size = 0;
  std::size_t right_size = 0;
  std::vector<std::vector<std::size_t>> adj;  // left id -> right ids

  BipartiteGraph() = default;
  BipartiteGraph(std::size_t l, std::size_t r)
      : left_size(l), right_size(r), adj(l) {}

  void add_edge(std::size_t u, std::size_t v) {
    if (u >= left_size || v >= right_size) {
      throw InputError("bipartite edge out of range");
    }
    adj[u].push_back(v);
  }

  std::size_t edge_count() const {
    std::size_t m = 0;
    for (const auto& a : adj) m += a.size();
    return m;
  }
};

struct Matching {
  std::vector<std::optional<std::size_t>> match_of_left;
  std::vector<std::optional<std::size_t>> match_of_right;
  std::size_t size = 0;
};

namespace detail {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

struct HopcroftKarp {
  const BipartiteGraph& g;
  std::vector<std::size_t> pair_l, pair_r, level;
  std::size_t nil_level = kUnset;  // shortest level at which a free right sits

  explicit HopcroftKarp(const BipartiteGraph& graph)
      : g(graph),
        pair_l(graph.left_size, kUnset),
        pair_r(graph.right_size, kUnset),
        level(graph.left_size, kUnset) {}

  bool bfs() {
    std::queue<std::size_t> q;
    for (std::size_t u = 0; u < g.left_size; ++u) {
      if (pair_l[u] == kUnset) {
        level[u] = 0;
        q.push(u);
      } else {
        level[u] = kUnset;
      }
    }
    nil_level = kUnset;
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      if (level[u] >= nil_level) continue;
      for (std::size_t v : g.adj[u]) {
        std::size_t w = pair_r[v];
        if (w == kUnset) {
          if (level[u] + 1 < nil_level) nil_level = level[u] + 1;
        } else if (level[w] == kUnset) {
          level[w] = level[u] + 1;
          q.push(w);
        }
      }
    }
    return nil_level != kUnset;
  }

  // Augments along a shortest alternating path starting at free vertex u.
  bool dfs(std::size_t u) {
    for (std::size_t v : g.adj[u]) {
      std::size_t w = pair_r[v];
      bool extends = w == kUnset ? level[u] + 1 == nil_level
                                 : level[w] == level[u] + 1 && dfs(w);
      if (extends) {
        pair_l[u] = v;
        pair_r[v] = u;
        return true;
      }
    }
    level[u] = kUnset;
    return false;
  }

  Matching run() {
    std::size_t matched = 0;
    while (bfs()) {
      for (std::size_t u = 0; u < g.left_size; ++u) {
        if (pair_l[u] == kUnset && dfs(u)) ++matched;
      }
    }
    Matching m;
    m.match_of_left.assign(g.left_size, std::nullopt);
    m.match_of_right.assign(g.right_size, std::nullopt);
    for (std::size_t u = 0; u < g.left_size; ++u) {
      if (pair_l[u] != kUnset) m.match_of_left[u] = pair_l[u];
    }
    for (std::size_t v = 0; v < g.right_size; ++v) {
      if (pair_r[v] != kUnset) m.match_of_right[v] = pair_r[v];
    }
    m.size = matched;
    return m;
  }
};

}  // namespace detail

/// Maximum bipartite matching (Hopcroft-Karp).
inline Matching max_matching(const BipartiteGraph& g) {
  return detail::HopcroftKarp(g).run();
}

/// Koenig construction: minimum vertex cover from a maximum matching via
/// alternating reachability from the unmatched left vertices. The complement
/// of the cover is a maximum independent set.
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
min_vertex_cover(const BipartiteGraph& g, const Matching& m) {
  std::vector<char> vis_l(g.left_size, 0), vis_r(g.right_size, 0);
  std::queue<std::size_t> q;
  for (std::size_t u = 0; u < g.left_size; ++u) {
    if (!m.match_of_left[u]) {
      vis_l[u] = 1;
      q.push(u);
    }
  }
  while (!q.empty()) {
    std::size_t u = q.front();
    q.pop();
    for (std::size_t v : g.adj[u]) {
      if (m.match_of_left[u] && *m.match_of_left[u] == v) continue;  // only
      if (vis_r[v]) continue;  // non-matching edges leave the left side
      vis_r[v] = 1;
      auto back = m.match_of_right[v];
      if (back && !vis_l[*back]) {
        vis_l[*back] = 1;
        q.push(*back);
      }
    }
  }
  std::vector<std::size_t> cover_l, cover_r;
  for (std::size_t u = 0; u < g.left_size; ++u) {
    if (!vis_l[u]) cover_l.push_back(u);
  }
  for (std::size_t v = 0; v < g.right_size; ++v) {
    if (vis_r[v]) cover_r.push_back(v);
  }
  UDG_CHECK(cover_l.size() + cover_r.size() == m.size,
            "Koenig cover size differs from matching size");
  return {std::move(cover_l), std::move(cover_r)};
}

}  // namespace udg
