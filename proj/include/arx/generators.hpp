#pragma once

#include <vector>

#include "arx/graph.hpp"
#include "arx/random.hpp"

namespace arx {

struct ChordalBipartiteOptions {
  // Interval lengths are uniform in [0, span].
  int span = 6;
  // A new interval starts at most `slack` before the furthest right end seen
  // so far. Small slack gives long, thin instances.
  int slack = 4;
};

// Clique-vertex incidence graph of a random interval graph on `n_intervals`
// intervals. Vertices 0..n_intervals-1 are the intervals, the remaining ones
// are the maximal cliques. Every interval overlaps an earlier one, so the
// result is connected; it is chordal bipartite.
Graph gen_chordal_bipartite(Vertex n_intervals, Seed seed, ChordalBipartiteOptions opts = {});

// Random intervals used by gen_chordal_bipartite, exposed for tests.
struct Interval {
  int lo, hi;
};
std::vector<Interval> random_intervals(Vertex n, Seed seed, ChordalBipartiteOptions opts = {});
// Maximal cliques of the interval graph, each sorted.
std::vector<std::vector<Vertex>> interval_maximal_cliques(const std::vector<Interval>& iv);

struct SplitInstance {
  Graph graph;
  std::vector<Vertex> clique;  // K
  std::vector<Vertex> stable;  // S
};

// Connected split graph: a clique K of random size in [1, n-1] and a stable
// set S whose vertices each get one forced K-neighbour plus every other K
// vertex with probability `density`. Labels are shuffled.
SplitInstance gen_split(Vertex n, double density, Seed seed);

// Uniform random labelled tree (random Pruefer sequence).
Graph random_tree(Vertex n, Seed seed);

// Random tree plus `extra` random non-edges turned into edges.
Graph random_connected(Vertex n, std::int64_t extra, Seed seed);

// Candidate absolute retract of k-chromatic graphs: a random tree T with a
// loop at every node, multiplied by K_k ((a, c) ~ (b, c') iff a = b or ab is
// a tree edge, and c != c'), followed by `extensions` covered vertices. Each
// new vertex picks a random earlier w and is joined to a greedy (k-1)-clique
// of N(w) plus, with probability `density`, to each other neighbour of w. Not guaranteed to be a retract; filter with
// check_characterization.
Graph gen_kchromatic_candidate(Vertex tree_order, int k, Vertex extensions, double density, Seed seed);

}  // namespace arx
