#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "arx/graph.hpp"

namespace arx {

inline constexpr int kUnreached = -1;

// Hop distances indexed by vertex; kUnreached for vertices not reached.
using Distances = std::vector<int>;

// Multi-source BFS. Throws InvalidArgument on an empty source set or an
// out-of-range source.
Distances bfs(const Graph& g, std::span<const Vertex> sources);
Distances bfs(const Graph& g, std::initializer_list<Vertex> sources);

// Reusable BFS state: repeated runs over graphs of the same order allocate
// nothing. Visited marks are generation-stamped so reset is O(1).
class BfsScratch {
 public:
  explicit BfsScratch(Vertex n = 0) { resize(n); }
  void resize(Vertex n);

  // Runs BFS from `sources`, stopping after layer `max_depth` when it is
  // non-negative. Returns the number of reached vertices.
  Vertex run(const Graph& g, std::span<const Vertex> sources, int max_depth = -1);

  int dist(Vertex v) const noexcept { return stamp_[v] == generation_ ? dist_[v] : kUnreached; }
  // Reached vertices in nondecreasing distance order.
  std::span<const Vertex> order() const noexcept { return {queue_.data(), reached_}; }
  int depth() const noexcept { return reached_ == 0 ? kUnreached : dist_[queue_[reached_ - 1]]; }

 private:
  std::vector<int> dist_;
  std::vector<unsigned> stamp_;
  std::vector<Vertex> queue_;
  unsigned generation_ = 0;
  std::size_t reached_ = 0;
};

// e(v) via a single BFS; requires g connected.
int eccentricity(const Graph& g, Vertex v);

// Reference O(nm) eccentricities: one BFS per vertex. Throws NotConnected.
std::vector<int> eccentricities_oracle(const Graph& g);

// Full distance matrix for small graphs (tests and verifiers).
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

int diameter_oracle(const Graph& g);

}  // namespace arx
