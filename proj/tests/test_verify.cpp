#include <algorithm>

#include "arx/errors.hpp"
#include "arx/generators.hpp"
#include "arx/planar.hpp"
#include "arx/verify.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace arx;

TEST_CASE("half-ball Helly, exhaustive") {
  // C6: N(0), N(2), N(4) pairwise meet and have no common vertex.
  auto c6 = half_ball_helly_sample(named::cycle(6));
  CHECK(c6.outcome == Verdict::kFail);
  CHECK(half_balls_violate_helly(named::cycle(6), c6.witness, c6.radii));
  CHECK(half_balls_violate_helly(named::cycle(6), {0, 2, 4}, {1, 1, 1}));

  Graph q3 = named::hypercube(3);
  auto q = half_ball_helly_sample(q3);
  CHECK(q.outcome == Verdict::kFail);
  CHECK(half_balls_violate_helly(q3, q.witness, q.radii));
  // The four unit half-balls around the even-weight class.
  CHECK(half_balls_violate_helly(q3, {0, 3, 5, 6}, {1, 1, 1, 1}));
  CHECK_FALSE(half_balls_violate_helly(q3, {0, 3, 5}, {1, 1, 1}));

  CHECK(half_ball_helly_sample(named::cycle(4)).outcome == Verdict::kPass);
  CHECK(half_ball_helly_sample(named::path(7)).outcome == Verdict::kPass);
  CHECK(half_ball_helly_sample(named::complete_bipartite(3, 3)).outcome == Verdict::kPass);
  CHECK_THROWS_AS(half_ball_helly_sample(named::cycle(5)), NotBipartite);
}

TEST_CASE("half-ball Helly, sampled") {
  for (Seed s = 0; s < 5; ++s) {
    Graph g = gen_chordal_bipartite(60, s);
    HalfBallOptions opts;
    opts.trials = 2000;
    opts.seed = s;
    CHECK(half_ball_helly_sample(g, opts).outcome == Verdict::kPassSampled);
  }
  // Long even cycles are found by the sampler.
  HalfBallOptions opts;
  opts.trials = 2000;
  auto c = half_ball_helly_sample(named::cycle(12), opts);
  REQUIRE(c.outcome == Verdict::kFail);
  CHECK(half_balls_violate_helly(named::cycle(12), c.witness, c.radii));

  opts.exhaustive = false;
  CHECK(half_ball_helly_sample(named::cycle(4), opts).outcome == Verdict::kPassSampled);
  auto again = half_ball_helly_sample(named::cycle(12), opts);
  CHECK(again.witness == c.witness);
}

TEST_CASE("Helly, exhaustive") {
  for (Seed s = 0; s < 20; ++s) CHECK(is_helly_small(random_tree(2 + static_cast<Vertex>(s % 7), s)).ok());
  auto c4 = is_helly_small(named::cycle(4));
  CHECK(c4.outcome == Verdict::kFail);
  CHECK(balls_violate_helly(named::cycle(4), c4.witness, c4.radii));
  CHECK(is_helly_small(named::complete(5)).ok());
  CHECK_THROWS_AS(is_helly_small(named::path(9)), SizeLimit);

  // Materialized half-squares of small chordal bipartite graphs.
  int checked = 0;
  for (Seed s = 0; s < 200 && checked < 40; ++s) {
    Graph g = gen_chordal_bipartite(3 + static_cast<Vertex>(s % 4), s, {3, 2});
    auto side = oracle::two_colour(g);
    for (int i = 0; i < 2; ++i) {
      std::vector<Vertex> keep;
      Graph h = oracle::half_square(g, side, i, &keep);
      if (h.order() < 2 || h.order() > 8) continue;
      CHECK(is_helly_small(h).ok());
      ++checked;
    }
  }
  CHECK(checked >= 20);
}

TEST_CASE("isometry") {
  Graph p5 = named::path(5);
  CHECK(isometric_check(p5, p5, {0, 1, 2, 3, 4}).ok());
  auto bad = isometric_check(named::path(3), p5, {0, 1, 3});
  CHECK(bad.outcome == Verdict::kFail);
  CHECK(bad.witness == std::vector<Vertex>{0, 2});
  CHECK(bad.radii == std::vector<int>{2, 3});
  CHECK_THROWS_AS(isometric_check(named::path(3), p5, {0, 1, 1}), InvalidArgument);

  auto c4 = embed_into_retract(plane::cycle(4));
  CHECK(isometric_check(named::cycle(4), c4.graph.graph(), c4.map.image).ok());
  // The cycle does not sit isometrically in a wheel.
  auto wheel = stellate_all(plane::cycle(6));
  CHECK_FALSE(isometric_check(named::cycle(6), wheel.graph(), {0, 1, 2, 3, 4, 5}).ok());
}

TEST_CASE("chordal bipartite, exhaustive") {
  CHECK(is_chordal_bipartite_small(named::cycle(4)).ok());
  auto c6 = is_chordal_bipartite_small(named::cycle(6));
  CHECK(c6.outcome == Verdict::kFail);
  CHECK(c6.witness.size() == 6);
  CHECK(is_induced_cycle(named::cycle(6), c6.witness));

  auto c5 = is_chordal_bipartite_small(named::cycle(5));
  CHECK(c5.outcome == Verdict::kFail);
  CHECK(is_induced_cycle(named::cycle(5), c5.witness));
  auto odd = is_chordal_bipartite_small(Graph::from_edges(
      6, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}}));
  CHECK(odd.witness.size() % 2 == 1);

  CHECK_FALSE(is_chordal_bipartite_small(named::hypercube(3)).ok());
  CHECK(is_chordal_bipartite_small(named::complete_bipartite(3, 4)).ok());
  CHECK_THROWS_AS(is_chordal_bipartite_small(named::path(15)), SizeLimit);

  for (Seed s = 0; s < 60; ++s) {
    Graph g = gen_chordal_bipartite(3 + static_cast<Vertex>(s % 5), s, {3, 2});
    if (g.order() > 14) continue;
    CHECK(is_chordal_bipartite_small(g).ok());
  }
  for (Vertex n = 6; n <= 14; n += 2) {
    auto v = is_chordal_bipartite_small(named::cycle(n));
    CHECK(is_induced_cycle(named::cycle(n), v.witness));
  }
}
