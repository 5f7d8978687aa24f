#include <algorithm>
#include <sstream>

#include "arx/bfs.hpp"
#include "arx/errors.hpp"
#include "arx/generators.hpp"
#include "arx/planar.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace arx;

namespace {

// Distances among the first `n` vertices of `host` equal those of `guest`.
bool isometric_prefix(const Graph& guest, const Graph& host) {
  BfsScratch inner(guest.order()), outer(host.order());
  for (Vertex s = 0; s < guest.order(); ++s) {
    Vertex src[] = {s};
    inner.run(guest, src);
    outer.run(host, src);
    for (Vertex t = 0; t < guest.order(); ++t)
      if (inner.dist(t) != outer.dist(t)) return false;
  }
  return true;
}

std::int64_t euler(const EmbeddedGraph& e) {
  return e.order() - e.size() + static_cast<std::int64_t>(trace_faces(e).size());
}

std::size_t longest_face(const EmbeddedGraph& e) {
  std::size_t best = 0;
  for (const auto& f : trace_faces(e)) best = std::max(best, f.size());
  return best;
}

EmbeddedGraph random_planar(int i) {
  return arx::random_planar(4 + (i * 37) % 297, 0.35 + 0.1 * (i % 6), 900 + static_cast<Seed>(i));
}

}  // namespace

TEST_CASE("face tracing") {
  auto k3 = EmbeddedGraph({{1, 2}, {2, 0}, {0, 1}});
  auto f3 = trace_faces(k3);
  CHECK(f3.size() == 2);
  for (const auto& f : f3) CHECK(f.size() == 3);

  auto k4 = plane::k4();
  CHECK(k4.graph() == named::complete(4));
  auto f4 = trace_faces(k4);
  CHECK(f4.size() == 4);
  for (const auto& f : f4) CHECK(f.size() == 3);

  auto rot = k4.rotations();
  std::swap(rot[0][0], rot[0][1]);
  CHECK_THROWS_AS(trace_faces(EmbeddedGraph(rot)), NotPlanarEmbedding);

  CHECK(trace_faces(plane::octahedron()).size() == 8);
  CHECK(plane::octahedron().graph().size() == 12);
  CHECK(euler(plane::grid(4, 5)) == 2);
  CHECK(plane::grid(4, 5).graph() == named::grid(4, 5));
  CHECK(euler(embed_tree(random_tree(30, 4))) == 2);

  CHECK_THROWS_AS(EmbeddedGraph({{1}, {}}), InvalidArgument);
  CHECK_THROWS_AS(EmbeddedGraph({{1, 1}, {0}}), InvalidArgument);
}

TEST_CASE("every dart is on exactly one face") {
  auto e = random_planar(11);
  std::vector<Edge> darts;
  for (const auto& f : trace_faces(e))
    for (std::size_t i = 0; i < f.size(); ++i) darts.emplace_back(f[i], f[(i + 1) % f.size()]);
  std::sort(darts.begin(), darts.end());
  CHECK(std::adjacent_find(darts.begin(), darts.end()) == darts.end());
  CHECK(darts.size() == static_cast<std::size_t>(2 * e.size()));
}

TEST_CASE("apollonian networks") {
  CHECK(apollonian(1, 3).graph() == named::complete(4));
  auto a2 = apollonian(2, 5);
  CHECK(a2.order() == 5);
  CHECK(a2.size() == 9);
  std::vector<Vertex> deg;
  for (Vertex v = 0; v < 5; ++v) deg.push_back(a2.graph().degree(v));
  std::sort(deg.begin(), deg.end());
  CHECK(deg == std::vector<Vertex>{3, 3, 4, 4, 4});
  for (int s = 1; s <= 50; ++s) {
    for (Seed seed = 0; seed < 4; ++seed) {
      auto a = apollonian(s, seed);
      CHECK(a.order() == 3 + s);
      CHECK(a.size() == 3 * a.order() - 6);
      CHECK(is_absolute_planar_retract(a));
    }
  }
}

TEST_CASE("retract checker") {
  CHECK(is_absolute_planar_retract(plane::k4()));
  auto oct = check_planar_retract(plane::octahedron());
  CHECK(oct.outcome == Verdict::kFail);
  CHECK(oct.witness.size() == 3);
  CHECK_FALSE(is_absolute_planar_retract(EmbeddedGraph({{1, 2}, {2, 0}, {0, 1}})));
  auto c4 = check_planar_retract(plane::cycle(4));
  CHECK(c4.outcome == Verdict::kFail);
  CHECK(c4.witness.size() == 4);
  // Stellating every face of the octahedron gives a retract that is not
  // chordal, hence not an Apollonian network.
  CHECK(is_absolute_planar_retract(stellate_all(plane::octahedron())));
}

TEST_CASE("biconnect") {
  auto c4 = plane::cycle(4);
  CHECK(biconnect(c4).rotations() == c4.rotations());

  auto star = biconnect(embed_tree(named::star(3)));
  CHECK(star.order() == 6);
  CHECK(cut_vertices(star.graph()).empty());
  CHECK(euler(star) == 2);

  for (int i = 0; i < 40; ++i) {
    Graph t = random_tree(2 + (i * 7) % 99, 60 + static_cast<Seed>(i));
    auto h = biconnect(embed_tree(t));
    if (t.order() >= 3) CHECK(cut_vertices(h.graph()).empty());
    CHECK(euler(h) == 2);
    CHECK(isometric_prefix(t, h.graph()));
  }
}

TEST_CASE("cut vertices against removal") {
  for (int i = 0; i < 30; ++i) {
    Graph g = random_connected(3 + i % 12, i % 5, 10 + static_cast<Seed>(i));
    auto cuts = cut_vertices(g);
    for (Vertex v = 0; v < g.order(); ++v) {
      std::vector<Vertex> rest;
      for (Vertex w = 0; w < g.order(); ++w)
        if (w != v) rest.push_back(w);
      bool is_cut = !is_connected(induced_subgraph(g, rest));
      CHECK(is_cut == std::binary_search(cuts.begin(), cuts.end(), v));
    }
  }
}

TEST_CASE("shrink faces") {
  auto c6 = shrink_faces(plane::cycle(6));
  CHECK(longest_face(c6) <= 5);
  CHECK(c6.order() == 6 + 4 + 4);  // both faces of C6 are long
  CHECK(isometric_prefix(named::cycle(6), c6.graph()));

  auto c4 = plane::cycle(4);
  CHECK(shrink_faces(c4).rotations() == c4.rotations());
  CHECK_THROWS_AS(shrink_faces(embed_tree(named::path(3))), NotBiconnected);

  for (Vertex n = 6; n <= 15; ++n) {
    auto c = shrink_faces(plane::cycle(n));
    CHECK(longest_face(c) <= 5);
    CHECK(isometric_prefix(named::cycle(n), c.graph()));
  }
  for (int i = 0; i < 20; ++i) {
    Graph t = random_tree(3 + (i * 5) % 60, 200 + static_cast<Seed>(i));
    auto h = shrink_faces(biconnect(embed_tree(t)));
    CHECK(longest_face(h) <= 5);
    CHECK(euler(h) == 2);
    CHECK(isometric_prefix(t, h.graph()));
  }
}

TEST_CASE("stellate all") {
  auto k3 = stellate_all(EmbeddedGraph({{1, 2}, {2, 0}, {0, 1}}));
  CHECK(k3.order() == 5);
  CHECK(longest_face(k3) == 3);

  auto c4 = stellate_all(plane::cycle(4));
  CHECK(c4.order() == 6);
  CHECK(longest_face(c4) == 3);

  auto c5 = stellate_all(plane::cycle(5));
  CHECK(c5.order() == 7);
  CHECK(longest_face(c5) == 3);
  CHECK(isometric_prefix(named::cycle(5), c5.graph()));

  CHECK_THROWS_AS(stellate_all(embed_tree(named::path(3))), NotBiconnected);
}

TEST_CASE("embedding into a retract") {
  for (Vertex n = 1; n <= 2; ++n) {
    auto r = embed_into_retract(embed_tree(named::path(n)));
    CHECK(is_absolute_planar_retract(r.graph));
    CHECK(isometric_prefix(named::path(n), r.graph.graph()));
  }
  auto k4 = embed_into_retract(plane::k4());
  CHECK(is_absolute_planar_retract(k4.graph));
  CHECK(isometric_prefix(named::complete(4), k4.graph.graph()));

  auto c4 = embed_into_retract(plane::cycle(4));
  CHECK(is_absolute_planar_retract(c4.graph));
  CHECK(isometric_prefix(named::cycle(4), c4.graph.graph()));
  REQUIRE(c4.map.stages.size() == 4);
  for (std::size_t s = 1; s < 4; ++s) CHECK(c4.map.stages[s].order >= c4.map.stages[s - 1].order);

  // The grid keeps its distances inside a retract; grids have unbounded
  // treewidth, so retracts do too.
  auto grid = embed_into_retract(plane::grid(5, 5));
  CHECK(is_absolute_planar_retract(grid.graph));
  CHECK(isometric_prefix(named::grid(5, 5), grid.graph.graph()));
}

TEST_CASE("random planar inputs") {
  for (int i = 0; i < 30; ++i) {
    auto e = random_planar(i);
    auto r = embed_into_retract(e);
    CHECK(is_absolute_planar_retract(r.graph));
    CHECK(isometric_prefix(e.graph(), r.graph.graph()));
    for (const auto& s : r.map.stages) CHECK(s.order >= e.order());
  }
}

TEST_CASE("embedded graph text format") {
  auto e = random_planar(5);
  std::stringstream ss;
  write_embedded_graph(ss, e);
  auto back = read_embedded_graph(ss);
  CHECK(back.rotations() == e.rotations());

  std::istringstream bad("3 3\n0 1\n1 2\n0 2\nrot 0: 1 2\nrot 1: 2 0\nrot 2: 0 0\n");
  CHECK_THROWS_AS(read_embedded_graph(bad), ParseError);
  std::istringstream missing("3 2\n0 1\n1 2\nrot 0: 1\nrot 1: 0 2\n");
  CHECK_THROWS_AS(read_embedded_graph(missing), ParseError);
}
