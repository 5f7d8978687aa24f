#pragma once

#include <vector>

#include "arx/colored_graph.hpp"
#include "arx/halfsquare.hpp"
#include "arx/random.hpp"

namespace arx {

struct SamplingOptions {
  // Sampling probability is p = c * ln(n) / window, clamped to (0, 1].
  double c = 3.0;
  // Sample every vertex (p = 1); estimates become exact.
  bool force_all = false;
  // Worker threads for the per-sample BFS runs; results do not depend on it.
  int threads = 1;
};

struct SampleEstimate {
  // Per-vertex estimate indexed by vertex id; 0 for vertices with no sampled
  // vertex within the window and for vertices outside the sampled set.
  std::vector<int> estimate;
  std::vector<Vertex> sample;
  double p = 0.0;
  Seed seed = 0;
};

struct PeripheralEstimate {
  int diameter = 0;
  std::vector<Vertex> peripherals;
  SampleEstimate detail;
};

// Hitting-set estimate of diam(H_side) and its peripheral vertices: each
// vertex of V_side is sampled with probability p = c ln|V_side| / k, exact
// half-eccentricities of the sample come from BFS in the base graph, and
// every vertex takes the smallest d_H(u, v) + e_H(u) over sampled u with
// d_H(u, v) <= k. Correct with high probability on Helly half-squares with
// diameter above 3k.
PeripheralEstimate peripherals_by_sampling_half(const HalfSquareView& view, int k, Seed seed,
                                                const SamplingOptions& opts = {});

// The same on colour class V_i of a coloured graph, with e_i(u) the largest
// distance from u to V_i and window D (d(u, v) <= D).
PeripheralEstimate peripherals_by_sampling_colour(const ColoredGraph& cg, int colour, int window,
                                                  Seed seed, const SamplingOptions& opts = {});

}  // namespace arx
