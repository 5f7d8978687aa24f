#include <algorithm>

#include "arx/bipartite_diameter.hpp"
#include "arx/halfsquare.hpp"
#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace arx;

namespace {

// Full half-square data computed from the materialized half-squares.
HalfDiamData exact_halves(const Graph& g) {
  HalfDiamData data;
  auto col = oracle::two_colour(g);
  for (int s = 0; s < 2; ++s) {
    std::vector<int> verts;
    Graph h = oracle::half_square(g, col, s, &verts);
    auto ecc = oracle::eccentricities(oracle::floyd_warshall(h));
    data.diam[s] = *std::max_element(ecc.begin(), ecc.end());
    data.rad[s] = *std::min_element(ecc.begin(), ecc.end());
    data.ecc[s].assign(g.order(), -1);
    for (std::size_t j = 0; j < verts.size(); ++j) {
      data.ecc[s][verts[j]] = ecc[j];
      if (ecc[j] == data.diam[s]) data.peripherals[s].push_back(verts[j]);
      if (ecc[j] == data.rad[s]) data.center[s].push_back(verts[j]);
    }
  }
  return data;
}

}  // namespace

TEST_CASE("combine_diameter examples") {
  Graph c6 = named::cycle(6);
  CHECK(combine_diameter(c6, bipartition(c6), exact_halves(c6)) == 3);
  Graph p5 = named::path(5);
  CHECK(combine_diameter(p5, bipartition(p5), exact_halves(p5)) == 4);
  Graph p4 = named::path(4);
  CHECK(combine_diameter(p4, bipartition(p4), exact_halves(p4)) == 3);
}

TEST_CASE("diameter_absolute_bipartite examples") {
  CHECK(diameter_absolute_bipartite(named::complete_bipartite(3, 3), 1).diameter == 2);
  CHECK(diameter_absolute_bipartite(named::cycle(6), 1).diameter == 3);
  CHECK(diameter_absolute_bipartite(named::path(2), 1).diameter == 1);
  CHECK(diameter_absolute_bipartite(Graph::from_edges(1, std::vector<Edge>{}), 1).diameter == 0);
  CHECK(diameter_absolute_bipartite(named::path(40), 1).diameter == 39);
  CHECK_THROWS_AS(diameter_absolute_bipartite(named::cycle(5), 1), NotBipartite);
}

TEST_CASE("half-diameter sandwich holds on every bipartite graph") {
  for (Seed s = 0; s < 40; ++s) {
    Graph g = random_tree(20, s);
    auto d = oracle::diameter(oracle::floyd_warshall(g));
    auto h = exact_halves(g);
    int m = std::max(h.diam[0], h.diam[1]);
    CHECK(d >= 2 * m);
    CHECK(d <= 2 * m + 1);
  }
}

TEST_CASE("diameter_absolute_bipartite matches the oracle in both regimes") {
  for (int i = 0; i < 40; ++i) {
    Graph g = corpus::chordal_bipartite(i, 30 + 7 * i);
    int want = diameter_oracle(g);
    for (Regime r : {Regime::kSmall, Regime::kSampling}) {
      BipartiteDiameterOptions opts;
      opts.force = r;
      opts.sampling.force_all = true;
      CHECK(diameter_absolute_bipartite(g, 5, opts).diameter == want);
    }
    CHECK(diameter_absolute_bipartite(g, 5).diameter == want);
  }
}

TEST_CASE("eccentricity_cases examples") {
  // Resolver that applies the e_H(v) = rad criterion by brute force.
  auto brute_resolver = [](const Graph& g, const HalfDiamData& data) {
    return [&g, &data](Vertex v) {
      auto b = bipartition(g);
      int o = 1 - b.side[v];
      int r = data.rad[o];
      auto nb = g.neighbors(v);
      auto d = bfs(g, nb);
      bool ok = true;
      for (Vertex u : b.part[o]) ok &= d[u] / 2 <= r - 1;
      return ok ? 2 * r : 2 * r + 1;
    };
  };
  Graph p5 = named::path(5);
  auto b5 = bipartition(p5);
  auto h5 = exact_halves(p5);
  CHECK(eccentricity_cases(p5, b5, 0, h5, brute_resolver(p5, h5)) == 4);
  CHECK(eccentricity_cases(p5, b5, 2, h5, brute_resolver(p5, h5)) == 2);

  Graph star = named::star(3);
  auto bs = bipartition(star);
  auto hs = exact_halves(star);
  CHECK(eccentricity_cases(star, bs, 1, hs, nullptr) == 2);

  HalfDiamData empty;
  CHECK_THROWS_AS(eccentricity_cases(p5, b5, 0, empty, nullptr), MissingData);

  // Every vertex of corpus graphs.
  for (int i = 0; i < 15; ++i) {
    Graph g = corpus::chordal_bipartite(i, 25);
    auto b = bipartition(g);
    auto h = exact_halves(g);
    auto ecc = eccentricities_oracle(g);
    auto res = brute_resolver(g, h);
    for (Vertex v = 0; v < g.order(); ++v) {
      bool anomalous = true;
      CHECK(eccentricity_cases(g, b, v, h, res, &anomalous) == ecc[v]);
      CHECK_FALSE(anomalous);
    }
  }
}
