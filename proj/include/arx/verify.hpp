#pragma once

#include <cstdint>
#include <vector>

#include "arx/graph.hpp"
#include "arx/random.hpp"
#include "arx/verdict.hpp"

namespace arx {

struct HalfBallOptions {
  std::int64_t trials = 10000;
  Seed seed = 0;
  // Enumerate every radius vector instead of sampling when n <= 8.
  bool exhaustive = true;
};

// Helly property of the half-balls N^r[v] ∩ V_i. A failure's witness lists
// the centers with their radii in `radii`; the detail names the side.
// Throws NotBipartite / NotConnected.
Verdict half_ball_helly_sample(const Graph& g, const HalfBallOptions& opts = {});

// True when the half-balls pairwise meet inside one side but have no common
// vertex there. Used to replay witnesses.
bool half_balls_violate_helly(const Graph& g, const std::vector<Vertex>& centers, const std::vector<int>& radii);

// Helly property of all balls, by exhaustive search. Throws SizeLimit when
// n > limit.
Verdict is_helly_small(const Graph& g, Vertex limit = 8);
bool balls_violate_helly(const Graph& g, const std::vector<Vertex>& centers, const std::vector<int>& radii);

// d_h(map[u], map[v]) = d_g(u, v) for all pairs. A failure's witness is the
// pair (u, v) with radii {d_g, d_h}. Throws InvalidArgument when `map` is not
// injective or leaves h.
Verdict isometric_check(const Graph& g, const Graph& h, const std::vector<Vertex>& map);

// Pass iff the graph is bipartite with no induced cycle of length >= 6; the
// witness of a failure is such a cycle in order (or an odd cycle). Throws
// SizeLimit when n > limit.
Verdict is_chordal_bipartite_small(const Graph& g, Vertex limit = 14);
bool is_induced_cycle(const Graph& g, const std::vector<Vertex>& cycle);

}  // namespace arx
