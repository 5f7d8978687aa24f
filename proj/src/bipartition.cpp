#include "arx/bipartition.hpp"

#include <algorithm>

#include "arx/errors.hpp"

namespace arx {

namespace {

// Cycle through the BFS-tree paths of u and v, which are adjacent and on the
// same layer.
std::vector<Vertex> odd_cycle(const std::vector<Vertex>& parent, Vertex u, Vertex v) {
  std::vector<Vertex> up, vp;
  while (u != v) {
    up.push_back(u);
    vp.push_back(v);
    u = parent[u];
    v = parent[v];
  }
  up.push_back(u);
  std::reverse(vp.begin(), vp.end());
  up.insert(up.end(), vp.begin(), vp.end());
  return up;
}

}  // namespace

Bipartition bipartition(const Graph& g) {
  Vertex n = g.order();
  if (n == 0) throw InvalidArgument("bipartition: empty graph");
  std::vector<int> level(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> queue;
  queue.reserve(static_cast<std::size_t>(n));
  level[0] = 0;
  queue.push_back(0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (level[w] < 0) {
        level[w] = level[u] + 1;
        parent[w] = u;
        queue.push_back(w);
      } else if (level[w] == level[u]) {
        throw NotBipartite(odd_cycle(parent, u, w));
      }
    }
  }
  if (queue.size() != static_cast<std::size_t>(n)) require_connected(g);
  Bipartition b;
  b.side.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    b.side[v] = static_cast<std::uint8_t>(level[v] & 1);
    b.part[b.side[v]].push_back(v);
  }
  return b;
}

}  // namespace arx
