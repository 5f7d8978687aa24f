#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "arx/bipartition.hpp"
#include "arx/errors.hpp"
#include "arx/graph.hpp"
#include "arx/random.hpp"
#include "arx/sampling.hpp"

namespace arx {

// Per-side half-square data. Eccentricities and centers are optional; they
// are required only by eccentricity_cases.
struct HalfDiamData {
  std::array<int, 2> diam{0, 0};
  std::array<std::vector<Vertex>, 2> peripherals;
  // ecc[s][v] = e_{H_s}(v) for v on side s, -1 elsewhere. Empty if unknown.
  std::array<std::vector<int>, 2> ecc;
  std::array<int, 2> rad{-1, -1};
  std::array<std::vector<Vertex>, 2> center;  // sorted
};

class MissingData : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// diam(G) from the half-square diameters and peripheral sets, assuming
// diam(G) >= 3: 2M+1 when M = 1, or when the half diameters agree and some
// peripheral vertex of one side has only peripheral neighbours; else 2M.
int combine_diameter(const Graph& g, const Bipartition& parts, const HalfDiamData& data);

enum class Regime { kTrivial, kSmall, kSampling };

struct BipartiteDiameterOptions {
  SamplingOptions sampling;
  // The exact small-diameter search is used when D < threshold_scale * sqrt(n).
  double threshold_scale = 1.0;
  // Overrides the regime choice (kTrivial means "choose automatically").
  Regime force = Regime::kTrivial;
};

struct BipartiteDiameterResult {
  int diameter = 0;
  int approximation = 0;  // e(v) of the first vertex
  Regime regime = Regime::kTrivial;
  int window = 0;         // sampling window when sampling was used
  HalfDiamData halves;
};

// Diameter of an absolute retract of bipartite graphs. Throws NotBipartite,
// and NotRetract when the refinement engine detects non-membership.
BipartiteDiameterResult diameter_absolute_bipartite(const Graph& g, Seed seed,
                                                    const BipartiteDiameterOptions& opts = {});

// e_G(v) for the case e_{H_i}(v) = rad(H_{1-i}); supplied by callers that can
// resolve it (chordal bipartite graphs).
using Case2Resolver = std::function<int(Vertex)>;

// e_G(v) from the half-square eccentricities, radius and center of the other
// side. Sets *anomalous when e_{H_i}(v) < rad(H_{1-i}) - 1, which cannot
// happen on absolute retracts.
int eccentricity_cases(const Graph& g, const Bipartition& parts, Vertex v, const HalfDiamData& data,
                       const Case2Resolver& resolver, bool* anomalous = nullptr);

}  // namespace arx
