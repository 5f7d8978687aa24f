#include <algorithm>

#include "arx/halfsquare.hpp"
#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace arx;

namespace {

std::vector<Vertex> oracle_within(const std::vector<std::vector<int>>& d, const Bipartition& b,
                                  const std::vector<Vertex>& targets, int k, int side) {
  std::vector<Vertex> out;
  for (Vertex v : b.part[side]) {
    bool ok = std::all_of(targets.begin(), targets.end(), [&](Vertex t) { return d[v][t] <= k; });
    if (ok) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("half_bfs examples") {
  Graph c6 = named::cycle(6);
  HalfSquareView h0(c6, 0);
  auto d = half_bfs(h0, 0);
  CHECK(d[0] == 0);
  CHECK(d[2] == 1);
  CHECK(d[4] == 1);
  CHECK(d[1] == kUnreached);
  CHECK_THROWS_AS(half_bfs(h0, 1), InvalidArgument);

  Graph p5 = named::path(5);
  auto e = half_bfs(HalfSquareView(p5, 0), 0);
  CHECK(e[0] == 0);
  CHECK(e[2] == 1);
  CHECK(e[4] == 2);
}

TEST_CASE("half_bfs matches the materialized half-square") {
  for (int i = 0; i < 10; ++i) {
    Graph g = corpus::chordal_bipartite(i, 25);
    auto col = oracle::two_colour(g);
    for (int s = 0; s < 2; ++s) {
      std::vector<int> verts;
      Graph h = oracle::half_square(g, col, s, &verts);
      auto dh = oracle::floyd_warshall(h);
      HalfSquareView view(g, s);
      for (std::size_t a = 0; a < verts.size(); ++a) {
        auto d = half_bfs(view, verts[a]);
        for (std::size_t b = 0; b < verts.size(); ++b) CHECK(d[verts[b]] == dh[a][b]);
      }
    }
  }
}

TEST_CASE("within_k_of_all examples") {
  // H0 of K_{3,3} is a triangle, as for C6; C6 itself is outside the class
  // (its half-balls N(0), N(2), N(4) pairwise meet with no common vertex).
  Graph k33 = named::complete_bipartite(3, 3);
  HalfSquareView h0(k33, 0);
  std::vector<Vertex> v0{0, 1, 2};
  CHECK(within_k_of_all(h0, v0, 2, 0) == v0);
  CHECK(within_k_of_all(h0, v0, 0, 0).empty());
  CHECK(within_k_of_all(h0, v0, 1, 1) == std::vector<Vertex>{3, 4, 5});

  Graph p4 = named::path(4);
  HalfSquareView p0(p4, 0);
  std::vector<Vertex> t{0, 2};
  CHECK(within_k_of_all(p0, t, 0, 0).empty());
  CHECK(within_k_of_all(p0, t, 1, 1) == std::vector<Vertex>{1});
  CHECK(within_k_of_all(p0, t, 2, 0) == std::vector<Vertex>{0, 2});
  CHECK_THROWS_AS(within_k_of_all(p0, t, 1, 0), ParityError);
  CHECK_THROWS_AS(within_k_of_all(p0, t, 2, 1), ParityError);
  std::vector<Vertex> mixed{0, 1};
  CHECK_THROWS_AS(within_k_of_all(p0, mixed, 2, 0), InvalidArgument);
  CHECK_THROWS_AS(within_k_of_all(p0, std::span<const Vertex>{}, 2, 0), InvalidArgument);

  Graph single = Graph::from_edges(1, std::vector<Edge>{});
  HalfSquareView s0(single, 0);
  std::vector<Vertex> only{0};
  CHECK(within_k_of_all(s0, only, 4, 0) == only);
}

TEST_CASE("within_k_of_all agrees with the BFS oracle on chordal bipartite graphs") {
  for (int i = 0; i < 25; ++i) {
    Graph g = corpus::chordal_bipartite(i, 20 + i);
    auto d = all_pairs_distances(g);
    auto b = bipartition(g);
    HalfSquareView view(g, 0);
    int diam = oracle::diameter(d);
    Rng rng(static_cast<Seed>(i), "targets");
    for (int ts = 0; ts < 2; ++ts) {
      // Whole side and a random subset as targets.
      std::vector<Vertex> all = b.part[ts], subset;
      for (Vertex v : all)
        if (rng.bernoulli(0.3)) subset.push_back(v);
      if (subset.empty()) subset.push_back(all.back());
      for (const auto& targets : {all, subset}) {
        for (int k = 0; k <= diam + 1; ++k) {
          int cs = (ts + k) % 2;
          auto got = within_k_of_all(view, targets, k, cs);
          CHECK(got == oracle_within(d, b, targets, k, cs));
        }
      }
    }
  }
}

TEST_CASE("within_k_of_all is monotone in k") {
  Graph g = corpus::chordal_bipartite(3, 60);
  HalfSquareView view(g, 0);
  std::vector<Vertex> all(view.vertices().begin(), view.vertices().end());
  std::vector<Vertex> prev;
  for (int k = 0; k < 40; k += 2) {
    auto cur = within_k_of_all(view, all, k, 0);
    CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
    prev = cur;
  }
}

TEST_CASE("half_diam_small examples") {
  Graph k33 = named::complete_bipartite(3, 3);
  auto r = half_diam_small(HalfSquareView(k33, 0), 4);
  REQUIRE(r);
  CHECK(r->diameter == 1);
  CHECK(r->peripherals == std::vector<Vertex>{0, 1, 2});

  Graph p5 = named::path(5);
  auto q = half_diam_small(HalfSquareView(p5, 0), 4);
  REQUIRE(q);
  CHECK(q->diameter == 2);
  CHECK(q->peripherals == std::vector<Vertex>{0, 4});

  Graph p21 = named::path(21);
  CHECK_FALSE(half_diam_small(HalfSquareView(p21, 0), 4));
  CHECK(half_diam_small(HalfSquareView(p21, 0), 10)->diameter == 10);
  CHECK(half_diam_small(HalfSquareView(p21, 1), 10)->diameter == 9);

  Graph k2 = named::path(2);
  auto one = half_diam_small(HalfSquareView(k2, 1), 1);
  CHECK(one->diameter == 0);
  CHECK(one->peripherals == std::vector<Vertex>{1});
}

TEST_CASE("half_diam_small agrees with the half_bfs oracle") {
  for (int i = 0; i < 20; ++i) {
    Graph g = corpus::chordal_bipartite(i, 30 + 3 * i);
    for (int s = 0; s < 2; ++s) {
      HalfSquareView view(g, s);
      std::vector<int> ecc;
      int diam = 0;
      for (Vertex v : view.vertices()) {
        auto d = half_bfs(view, v);
        int e = 0;
        for (Vertex w : view.vertices()) e = std::max(e, d[w]);
        ecc.push_back(e);
        diam = std::max(diam, e);
      }
      std::vector<Vertex> per;
      for (std::size_t j = 0; j < ecc.size(); ++j)
        if (ecc[j] == diam) per.push_back(view.vertices()[j]);
      auto r = half_diam_small(view, 1000);
      REQUIRE(r);
      CHECK(r->diameter == diam);
      CHECK(r->peripherals == per);
    }
  }
}

TEST_CASE("same-side distances are even and halve") {
  for (int i = 0; i < 10; ++i) {
    Graph g = corpus::chordal_bipartite(i, 40);
    auto b = bipartition(g);
    auto d = all_pairs_distances(g);
    HalfSquareView view(g, 0);
    for (Vertex u : b.part[0]) {
      auto h = half_bfs(view, u);
      for (Vertex v : b.part[0]) {
        CHECK(d[u][v] % 2 == 0);
        CHECK(h[v] * 2 == d[u][v]);
      }
    }
  }
}
