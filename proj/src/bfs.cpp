#include "arx/bfs.hpp"

#include <algorithm>
#include <limits>

#include "arx/errors.hpp"
#include "arx/instrument.hpp"

namespace arx {

Distances bfs(const Graph& g, std::span<const Vertex> sources) {
  if (sources.empty()) throw InvalidArgument("bfs: empty source set");
  BfsScratch scratch(g.order());
  scratch.run(g, sources);
  Distances d(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) d[v] = scratch.dist(v);
  return d;
}

Distances bfs(const Graph& g, std::initializer_list<Vertex> sources) {
  return bfs(g, std::span<const Vertex>(sources.begin(), sources.size()));
}

void BfsScratch::resize(Vertex n) {
  dist_.assign(static_cast<std::size_t>(n), 0);
  stamp_.assign(static_cast<std::size_t>(n), 0);
  queue_.assign(static_cast<std::size_t>(n), 0);
  generation_ = 0;
  reached_ = 0;
}

Vertex BfsScratch::run(const Graph& g, std::span<const Vertex> sources, int max_depth) {
  if (static_cast<std::size_t>(g.order()) != dist_.size()) resize(g.order());
  if (++generation_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0u);
    generation_ = 1;
  }
  std::size_t head = 0, tail = 0;
  for (Vertex s : sources) {
    if (!g.contains(s)) throw InvalidArgument("bfs: source out of range");
    if (stamp_[s] == generation_) continue;
    stamp_[s] = generation_;
    dist_[s] = 0;
    queue_[tail++] = s;
  }
  std::uint64_t scanned = 0;
  while (head < tail) {
    Vertex u = queue_[head++];
    int du = dist_[u];
    if (max_depth >= 0 && du >= max_depth) continue;
    auto nb = g.neighbors(u);
    scanned += nb.size();
    for (Vertex w : nb) {
      if (stamp_[w] == generation_) continue;
      stamp_[w] = generation_;
      dist_[w] = du + 1;
      queue_[tail++] = w;
    }
  }
  ops::add(scanned + tail);
  reached_ = tail;
  return static_cast<Vertex>(tail);
}

int eccentricity(const Graph& g, Vertex v) {
  BfsScratch s(g.order());
  Vertex v0[] = {v};
  if (s.run(g, v0) != g.order()) throw NotConnected({});
  return s.depth();
}

std::vector<int> eccentricities_oracle(const Graph& g) {
  require_connected(g);
  BfsScratch s(g.order());
  std::vector<int> ecc(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    Vertex src[] = {v};
    s.run(g, src);
    ecc[v] = s.depth();
  }
  return ecc;
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  std::vector<std::vector<int>> d(static_cast<std::size_t>(g.order()));
  BfsScratch s(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    Vertex src[] = {v};
    s.run(g, src);
    d[v].resize(static_cast<std::size_t>(g.order()));
    for (Vertex w = 0; w < g.order(); ++w) d[v][w] = s.dist(w);
  }
  return d;
}

int diameter_oracle(const Graph& g) {
  auto ecc = eccentricities_oracle(g);
  return *std::max_element(ecc.begin(), ecc.end());
}

}  // namespace arx
