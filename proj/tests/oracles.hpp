#pragma once

// Independent reference computations used only by the tests. They avoid the
// library's BFS so that a bug there cannot hide itself.

#include <algorithm>
#include <vector>

#include "arx/graph.hpp"

namespace oracle {

inline constexpr int kInf = 1 << 28;

inline std::vector<std::vector<int>> floyd_warshall(const arx::Graph& g) {
  int n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (int w : g.neighbors(v)) d[v][w] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (d[i][k] == kInf) continue;
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  return d;
}

inline std::vector<int> eccentricities(const std::vector<std::vector<int>>& d) {
  std::vector<int> e(d.size(), 0);
  for (std::size_t v = 0; v < d.size(); ++v) e[v] = *std::max_element(d[v].begin(), d[v].end());
  return e;
}

inline int diameter(const std::vector<std::vector<int>>& d) {
  int best = 0;
  for (const auto& row : d) best = std::max(best, *std::max_element(row.begin(), row.end()));
  return best;
}

// Materialized half-square on the vertices with side[v] == s; vertex i of the
// result is verts[i].
inline arx::Graph half_square(const arx::Graph& g, const std::vector<int>& side, int s,
                              std::vector<int>* verts_out = nullptr) {
  std::vector<int> local(g.order(), -1), verts;
  for (int v = 0; v < g.order(); ++v)
    if (side[v] == s) {
      local[v] = static_cast<int>(verts.size());
      verts.push_back(v);
    }
  std::vector<arx::Edge> edges;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      auto a = g.neighbors(verts[i]);
      auto b = g.neighbors(verts[j]);
      std::vector<int> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      if (!common.empty()) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  if (verts_out) *verts_out = verts;
  return arx::Graph::from_edges(static_cast<int>(verts.size()), edges);
}

// Two-colouring by DFS, independent of arx::bipartition.
inline std::vector<int> two_colour(const arx::Graph& g) {
  std::vector<int> c(g.order(), -1), stack{0};
  c[0] = 0;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(u))
      if (c[w] < 0) {
        c[w] = 1 - c[u];
        stack.push_back(w);
      }
  }
  return c;
}

}  // namespace oracle
