#include <algorithm>
#include <memory>
#include <set>
#include <sstream>

#include "arx/bipartition.hpp"
#include "arx/chordal_bipartite.hpp"
#include "arx/generators.hpp"
#include "arx/instrument.hpp"
#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace arx;

namespace {

std::vector<int> sides_of(const Graph& g) {
  auto b = bipartition(g);
  return {b.side.begin(), b.side.end()};
}

// Maximal cliques of a small graph by brute force over subsets.
std::set<std::vector<int>> maximal_cliques_brute(const Graph& h) {
  const int n = h.order();
  std::vector<unsigned> cliques;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = a + 1; b < n && ok; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) && !h.has_edge(a, b)) ok = false;
    if (ok) cliques.push_back(mask);
  }
  std::set<std::vector<int>> out;
  for (unsigned m : cliques) {
    bool maximal = std::none_of(cliques.begin(), cliques.end(),
                                [&](unsigned o) { return o != m && (o & m) == m; });
    if (!maximal) continue;
    std::vector<int> c;
    for (int a = 0; a < n; ++a)
      if (m >> a & 1) c.push_back(a);
    out.insert(c);
  }
  return out;
}

struct Half {
  std::vector<int> verts;
  Graph h;
  std::vector<std::vector<int>> d;
};

Half half_of(const Graph& g, int s) {
  Half out;
  out.h = oracle::half_square(g, sides_of(g), s, &out.verts);
  out.d = oracle::floyd_warshall(out.h);
  return out;
}

int local_of(const Half& hf, Vertex v) {
  return static_cast<int>(std::lower_bound(hf.verts.begin(), hf.verts.end(), v) - hf.verts.begin());
}

std::vector<Graph> small_corpus() {
  std::vector<Graph> gs{named::path(2), named::path(3), named::path(4), named::path(7),
                        named::cycle(4), named::star(5), named::complete_bipartite(3, 3),
                        named::complete_bipartite(2, 5), named::hypercube(2)};
  for (int i = 0; i < 40; ++i) gs.push_back(corpus::chordal_bipartite(i, 4 + i % 6));
  return gs;
}

}  // namespace

TEST_CASE("clique tree examples") {
  auto c4 = named::cycle(4);
  auto t = clique_tree(HalfSquareView(c4, 0));
  REQUIRE(t.cliques.size() == 1);
  CHECK(t.cliques[0] == std::vector<Vertex>{0, 2});

  auto st = named::star(4);
  auto ts = clique_tree(HalfSquareView(st, 1));
  REQUIRE(ts.cliques.size() == 1);
  CHECK(ts.cliques[0] == std::vector<Vertex>{1, 2, 3, 4});

  auto p5 = named::path(5);
  auto tp = clique_tree(HalfSquareView(p5, 0));
  CHECK(tp.cliques.size() == 2);
  CHECK(tp.weight() == 4);

  std::ostringstream os;
  write_clique_tree(os, tp);
  CHECK(os.str().find("0 1") != std::string::npos);
}

TEST_CASE("six-cycle has no clique tree") {
  auto c6 = named::cycle(6);
  CHECK_THROWS_AS(clique_tree(HalfSquareView(c6, 0)), NotDualHypertree);
  CHECK_THROWS_AS(all_eccentricities_chordal_bipartite(c6), NotDualHypertree);
}

TEST_CASE("clique tree nodes are the maximal cliques and satisfy the subtree property") {
  for (const auto& g : small_corpus()) {
    if (g.order() > 28) continue;
    for (int s = 0; s < 2; ++s) {
      auto hf = half_of(g, s);
      if (hf.h.order() > 14 || hf.h.order() == 0) continue;
      HalfSquareView view(g, s);
      auto t = clique_tree(view);
      std::set<std::vector<int>> got;
      for (const auto& k : t.cliques) {
        std::vector<int> loc;
        for (Vertex v : k) loc.push_back(local_of(hf, v));
        got.insert(loc);
      }
      CHECK(got.size() == t.cliques.size());
      CHECK(got == maximal_cliques_brute(hf.h));
      REQUIRE(t.parent.size() == t.cliques.size());
      for (std::size_t i = 1; i < t.parent.size(); ++i) CHECK(t.parent[i] < static_cast<int>(i));
      // The cliques containing v induce a connected subtree: exactly one of
      // them has a parent not containing v.
      for (Vertex v : view.vertices()) {
        int roots = 0;
        for (std::size_t i = 0; i < t.cliques.size(); ++i) {
          if (!std::binary_search(t.cliques[i].begin(), t.cliques[i].end(), v)) continue;
          int p = t.parent[i];
          if (p < 0 || !std::binary_search(t.cliques[static_cast<std::size_t>(p)].begin(),
                                           t.cliques[static_cast<std::size_t>(p)].end(), v))
            ++roots;
        }
        CHECK(roots == 1);
      }
      CHECK(t.weight() <= g.order() + g.size());
    }
  }
}

TEST_CASE("gate on a path") {
  auto p5 = named::path(5);
  HalfSquareView view(p5, 0);
  auto t = clique_tree(view);
  std::vector<Vertex> c{0};
  auto gt = gates(t, view, c);
  CHECK(gt.dist[4] == 2);
  CHECK(gt.gate[4] == 2);
  CHECK(gt.gate[2] == 2);
  CHECK(gt.gate[0] == -1);
  std::vector<Vertex> bad{0, 4};
  CHECK_THROWS_AS(gates(t, view, bad), InvalidArgument);
}

TEST_CASE("gates dominate the nearest part of the clique") {
  for (const auto& g : small_corpus()) {
    for (int s = 0; s < 2; ++s) {
      HalfSquareView view(g, s);
      auto hf = half_of(g, s);
      auto t = clique_tree(view);
      for (const auto& k : t.cliques) {
        auto gt = gates(t, view, k);
        for (Vertex v : view.vertices()) {
          int lv = local_of(hf, v);
          int dv = oracle::kInf;
          for (Vertex x : k) dv = std::min(dv, hf.d[lv][local_of(hf, x)]);
          CHECK(gt.dist[v] == dv);
          if (dv == 0) continue;
          Vertex gv = gt.gate[v];
          REQUIRE(gv >= 0);
          int lg = local_of(hf, gv);
          CHECK(hf.d[lv][lg] == dv - 1);
          for (Vertex x : k) {
            int lx = local_of(hf, x);
            if (hf.d[lv][lx] == dv) CHECK(hf.d[lg][lx] <= 1);
          }
        }
      }
    }
  }
}

TEST_CASE("center examples") {
  auto p5 = named::path(5);
  HalfSquareView v0(p5, 0);
  auto t0 = clique_tree(v0);
  CHECK(center_set(t0, v0) == std::vector<Vertex>{2});

  auto p4 = named::path(4);
  CHECK(all_eccentricities_chordal_bipartite(p4) == std::vector<int>{3, 2, 2, 3});
  CHECK(all_eccentricities_chordal_bipartite(named::cycle(4)) == std::vector<int>{2, 2, 2, 2});
  CHECK(all_eccentricities_chordal_bipartite(named::path(1)) == std::vector<int>{0});
  CHECK(all_eccentricities_chordal_bipartite(named::path(2)) == std::vector<int>{1, 1});
}

TEST_CASE("central vertex and center against the oracle") {
  for (const auto& g : small_corpus()) {
    for (int s = 0; s < 2; ++s) {
      HalfSquareView view(g, s);
      auto hf = half_of(g, s);
      auto t = clique_tree(view);
      auto e = oracle::eccentricities(hf.d);
      int rad = *std::min_element(e.begin(), e.end());
      Vertex c = central_vertex(t, view);
      CHECK(e[local_of(hf, c)] == rad);
      std::vector<Vertex> want;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] == rad) want.push_back(hf.verts[i]);
      CHECK(center_set(t, view) == want);
      // Unimodality: a non-central vertex has a neighbour of smaller eccentricity.
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == rad) continue;
        bool down = false;
        for (Vertex j : hf.h.neighbors(static_cast<Vertex>(i))) down |= e[j] < e[i];
        CHECK(down);
      }
    }
  }
}

TEST_CASE("all eccentricities match Floyd-Warshall") {
  int checked = 0;
  for (int i = 0; i < 150; ++i) {
    auto g = corpus::chordal_bipartite(i, 5 + i % 40);
    auto want = oracle::eccentricities(oracle::floyd_warshall(g));
    auto got = all_eccentricities_detail(g);
    CHECK(got.ecc == want);
    CHECK(got.anomalies == 0);
    ++checked;
  }
  for (const auto& g : small_corpus()) {
    CHECK(all_eccentricities_chordal_bipartite(g) == oracle::eccentricities(oracle::floyd_warshall(g)));
  }
  CHECK(checked == 150);
}

TEST_CASE("long instances exercise the far-witness branch") {
  for (int i = 0; i < 20; ++i) {
    auto g = gen_chordal_bipartite(60 + 7 * i, 77 + static_cast<Seed>(i), {2, 0});
    auto got = all_eccentricities_detail(g);
    CHECK(got.halves.rad[0] >= 3);
    CHECK(got.ecc == oracle::eccentricities(oracle::floyd_warshall(g)));
  }
}

TEST_CASE("work is linear in the graph size") {
  for (int i = 0; i < 5; ++i) {
    auto g = gen_chordal_bipartite(2000, 5 + static_cast<Seed>(i), {4, 2});
    ops::reset();
    all_eccentricities_chordal_bipartite(g);
    CHECK(ops::read() <= 200u * static_cast<std::uint64_t>(g.order() + g.size()));
  }
}
