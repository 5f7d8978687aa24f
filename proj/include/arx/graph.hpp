#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace arx {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph in compressed (CSR) form. Vertices are
// 0..order()-1 and every adjacency list is sorted.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from an edge list. Throws InvalidArgument on loops,
  // duplicate edges and out-of-range endpoints. Edge orientation is ignored.
  static Graph from_edges(Vertex n, std::span<const Edge> edges);
  static Graph from_edges(Vertex n, const std::vector<Edge>& edges) {
    return from_edges(n, std::span<const Edge>(edges));
  }

  Vertex order() const noexcept { return static_cast<Vertex>(offsets_.empty() ? 0 : offsets_.size() - 1); }
  std::int64_t size() const noexcept { return static_cast<std::int64_t>(adjacency_.size() / 2); }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  Vertex degree(Vertex v) const noexcept {
    return static_cast<Vertex>(offsets_[v + 1] - offsets_[v]);
  }
  bool has_edge(Vertex u, Vertex v) const noexcept;
  bool contains(Vertex v) const noexcept { return v >= 0 && v < order(); }

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
};

// Subgraph induced by `keep` (in the given order): vertex i of the result is
// keep[i] of g.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

bool is_connected(const Graph& g);

// Throws NotConnected listing the vertices unreachable from vertex 0.
void require_connected(const Graph& g);

// Small named graphs used across tests, examples and the CLI.
namespace named {
Graph path(Vertex n);
Graph cycle(Vertex n);
Graph complete(Vertex n);
Graph complete_bipartite(Vertex a, Vertex b);
Graph star(Vertex leaves);
Graph hypercube(int dim);
Graph octahedron();
Graph grid(Vertex rows, Vertex cols);
}  // namespace named

}  // namespace arx
