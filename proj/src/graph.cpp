#include "arx/graph.hpp"

#include <algorithm>
#include <string>

#include "arx/bfs.hpp"
#include "arx/errors.hpp"

namespace arx {

Graph Graph::from_edges(Vertex n, std::span<const Edge> edges) {
  if (n < 0) throw InvalidArgument("negative vertex count");
  Graph g;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") out of range for n=" + std::to_string(n));
    }
    if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u));
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : edges) {
    g.adjacency_[fill[u]++] = v;
    g.adjacency_[fill[v]++] = u;
  }
  for (Vertex v = 0; v < n; ++v) {
    auto first = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      throw InvalidArgument("duplicate edge (" + std::to_string(v) + "," + std::to_string(*dup) + ")");
    }
  }
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  if (!contains(u) || !contains(v)) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (!g.contains(keep[i])) throw InvalidArgument("induced_subgraph: vertex out of range");
    if (local[keep[i]] != -1) throw InvalidArgument("induced_subgraph: repeated vertex");
    local[keep[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (Vertex w : g.neighbors(keep[i])) {
      Vertex j = local[w];
      if (j > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), j);
    }
  }
  return Graph::from_edges(static_cast<Vertex>(keep.size()), edges);
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  auto d = bfs(g, {0});
  return std::none_of(d.begin(), d.end(), [](int x) { return x == kUnreached; });
}

void require_connected(const Graph& g) {
  if (g.order() == 0) throw InvalidArgument("empty graph");
  auto d = bfs(g, {0});
  std::vector<Vertex> missing;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (d[v] == kUnreached) missing.push_back(v);
  }
  if (!missing.empty()) throw NotConnected(std::move(missing));
}

namespace named {

Graph path(Vertex n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph cycle(Vertex n) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

Graph complete(Vertex n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

Graph complete_bipartite(Vertex a, Vertex b) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph::from_edges(a + b, e);
}

Graph star(Vertex leaves) { return complete_bipartite(1, leaves); }

Graph hypercube(int dim) {
  Vertex n = Vertex{1} << dim;
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v)
    for (int b = 0; b < dim; ++b) {
      Vertex w = v ^ (Vertex{1} << b);
      if (v < w) e.emplace_back(v, w);
    }
  return Graph::from_edges(n, e);
}

// Antipodal pairs are (0,1), (2,3), (4,5).
Graph octahedron() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 6; ++i)
    for (Vertex j = i + 1; j < 6; ++j)
      if (i / 2 != j / 2) e.emplace_back(i, j);
  return Graph::from_edges(6, e);
}

Graph grid(Vertex rows, Vertex cols) {
  std::vector<Edge> e;
  for (Vertex r = 0; r < rows; ++r)
    for (Vertex c = 0; c < cols; ++c) {
      Vertex v = r * cols + c;
      if (c + 1 < cols) e.emplace_back(v, v + 1);
      if (r + 1 < rows) e.emplace_back(v, v + cols);
    }
  return Graph::from_edges(rows * cols, e);
}

}  // namespace named

}  // namespace arx
