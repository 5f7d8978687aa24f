#include "arx/bipartite_diameter.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "arx/bfs.hpp"
#include "arx/halfsquare.hpp"

namespace arx {

namespace {

bool is_member(const std::vector<Vertex>& sorted, Vertex v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

// Some peripheral vertex of side i whose neighbours are all peripheral on
// the other side.
bool has_peripheral_witness(const Graph& g, const std::vector<Vertex>& per_i,
                            const std::vector<Vertex>& per_other) {
  for (Vertex v : per_i) {
    auto nb = g.neighbors(v);
    if (std::all_of(nb.begin(), nb.end(), [&](Vertex u) { return is_member(per_other, u); })) return true;
  }
  return false;
}

}  // namespace

int combine_diameter(const Graph& g, const Bipartition& parts, const HalfDiamData& data) {
  (void)parts;
  const int m = std::max(data.diam[0], data.diam[1]);
  if (m <= 1) return 3;
  if (data.diam[0] != data.diam[1]) return 2 * m;
  // Scan the smaller peripheral set first.
  int first = data.peripherals[0].size() <= data.peripherals[1].size() ? 0 : 1;
  for (int i : {first, 1 - first}) {
    if (has_peripheral_witness(g, data.peripherals[i], data.peripherals[1 - i])) return 2 * m + 1;
  }
  return 2 * m;
}

BipartiteDiameterResult diameter_absolute_bipartite(const Graph& g, Seed seed,
                                                    const BipartiteDiameterOptions& opts) {
  auto parts = std::make_shared<const Bipartition>(bipartition(g));
  BipartiteDiameterResult out;
  const Vertex n = g.order();
  if (n == 1) return out;
  if (n == 2) {
    out.diameter = 1;
    return out;
  }
  if (g.size() == static_cast<std::int64_t>(parts->size(0)) * static_cast<std::int64_t>(parts->size(1))) {
    out.diameter = 2;
    return out;
  }
  const int d = eccentricity(g, 0);
  out.approximation = d;
  Regime regime = opts.force;
  if (regime == Regime::kTrivial) {
    regime = d < opts.threshold_scale * std::sqrt(static_cast<double>(n)) ? Regime::kSmall : Regime::kSampling;
  }
  out.regime = regime;
  for (int s = 0; s < 2; ++s) {
    HalfSquareView view(g, parts, s);
    if (regime == Regime::kSmall) {
      // diam(H_s) <= diam(G) / 2 <= D.
      auto r = half_diam_small(view, d + 1);
      if (!r) throw NotRetract("half-square diameter exceeds the 2-approximation", {}, -1);
      out.halves.diam[s] = r->diameter;
      out.halves.peripherals[s] = std::move(r->peripherals);
    } else {
      // diam(H_s) >= (diam(G) - 1) / 2 >= (D - 1) / 2 > 3k.
      out.window = std::max(1, (d - 4) / 6);
      auto r = peripherals_by_sampling_half(view, out.window, seed, opts.sampling);
      out.halves.diam[s] = r.diameter;
      out.halves.peripherals[s] = std::move(r.peripherals);
    }
  }
  out.diameter = combine_diameter(g, *parts, out.halves);
  return out;
}

int eccentricity_cases(const Graph& g, const Bipartition& parts, Vertex v, const HalfDiamData& data,
                       const Case2Resolver& resolver, bool* anomalous) {
  if (!g.contains(v)) throw InvalidArgument("eccentricity_cases: vertex out of range");
  const int i = parts.side[v];
  const int o = 1 - i;
  if (data.ecc[i].empty() || data.ecc[o].empty() || data.rad[o] < 0) {
    throw MissingData("eccentricity_cases: half-square eccentricities and radius required");
  }
  const int e = data.ecc[i][v];
  const int r = data.rad[o];
  if (anomalous) *anomalous = e < r - 1;
  if (e <= r - 1) return 2 * r - 1;
  if (e >= r + 1) {
    for (Vertex u : g.neighbors(v))
      if (data.ecc[o][u] < e) return 2 * e;
    return 2 * e + 1;
  }
  if (!data.center[o].empty()) {
    for (Vertex u : g.neighbors(v))
      if (!is_member(data.center[o], u)) return 2 * r + 1;
  }
  if (!resolver) throw MissingData("eccentricity_cases: no resolver for e_H(v) = rad");
  return resolver(v);
}

}  // namespace arx
