#pragma once

#include <array>
#include <vector>

#include "arx/colored_graph.hpp"
#include "arx/graph.hpp"
#include "arx/random.hpp"
#include "arx/sampling.hpp"
#include "arx/verdict.hpp"

namespace arx {

// Proper k-colouring of an absolute retract of k-chromatic graphs, k = size
// of a greedy maximal clique at vertex 0. Throws NotRetract when a vertex is
// forced onto colour k + 1.
ColoredGraph color_absolute_retract(const Graph& g);

// diam <= 2, decided by one maximum-degree candidate per colour class.
bool diam_le_two(const ColoredGraph& cg);

// G[V_a ∪ V_b ∪ V_c] recoloured 1, 2, 3 in triple order, with back-map.
struct ColourTriple {
  std::array<int, 3> colours{};  // original colours
  ColoredGraph graph;
  std::vector<Vertex> back;      // local -> original vertex
};

// Colour classes 1..k padded with 1, 2 to a multiple of three and cut into
// consecutive triples: k=4 gives (1,2,3), (4,1,2).
std::vector<ColourTriple> triple_split(const ColoredGraph& cg);

// {v in V_i : e_i(v) <= D} for a 3-coloured absolute retract, by D rounds of
// group merging. Throws NotRetract (step = round) on a broken invariant.
std::vector<Vertex> colour_ecc_at_most(const ColoredGraph& cg3, int i, int D);

struct ColourDiameter {
  int diameter = 0;               // d_i
  std::vector<Vertex> peripherals;
  bool sampled = false;
  int approximation = 0;          // e_i of the first vertex of V_i
};

struct KChromaticOptions {
  SamplingOptions sampling;
  // The exact search is used when e_i(v) <= threshold_scale * 16 sqrt(n) + 10.
  double threshold_scale = 1.0;
  bool force_sampling = false;
  bool force_exact = false;
};

// d_i and the i-peripheral vertices of a 3-coloured graph.
ColourDiameter di_and_peripherals(const ColoredGraph& cg3, int i, Seed seed,
                                  const KChromaticOptions& opts = {});

struct KChromaticResult {
  int diameter = 0;
  ColoredGraph coloured;
  std::vector<ColourDiameter> per_colour;  // index i - 1; empty when diam <= 2
  bool small = false;                      // decided by diam_le_two
};

// diam(G) for an absolute retract of k-chromatic graphs, k >= 3.
KChromaticResult diameter_k_chromatic_detail(const Graph& g, Seed seed, const KChromaticOptions& opts = {});
int diameter_k_chromatic(const Graph& g, Seed seed, const KChromaticOptions& opts = {});

// Combines per-colour diameters and peripheral sets, assuming diam >= 3.
int combine_colour_diameters(const ColoredGraph& cg, const std::vector<ColourDiameter>& per_colour);

struct CharacterizationOptions {
  // Condition 1 is checked over every radius vector when n <= 8 and this is
  // set, otherwise on `budget` random ball families.
  bool exhaustive = true;
  int budget = 2000;
  Seed seed = 0;
};

// The three-condition characterization of absolute retracts of k-chromatic
// graphs under the given colouring: colour-restricted Helly property of balls,
// all maximal cliques of size k, and coloured neighbours on shortest paths.
Verdict check_characterization(const ColoredGraph& cg, const CharacterizationOptions& opts = {});

}  // namespace arx
