#include "arx/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "arx/bfs.hpp"
#include "arx/bipartition.hpp"
#include "arx/errors.hpp"

namespace arx {

namespace {

struct Candidate {
  std::uint64_t set;
  int radius;
};

// Looks for at most one candidate per center such that the chosen sets
// pairwise meet but have an empty intersection. Smaller balls around the same
// center are contained in larger ones, so one per center is enough.
bool search_violation(const std::vector<std::vector<Candidate>>& cands, std::uint64_t universe,
                      std::vector<Vertex>& centers, std::vector<int>& radii) {
  const auto n = static_cast<Vertex>(cands.size());
  std::vector<std::uint64_t> chosen;
  std::function<bool(Vertex, std::uint64_t)> rec = [&](Vertex v, std::uint64_t acc) {
    if (acc == 0) return true;
    if (v == n) return false;
    if (rec(v + 1, acc)) return true;
    for (const Candidate& c : cands[static_cast<std::size_t>(v)]) {
      if (!std::all_of(chosen.begin(), chosen.end(), [&](std::uint64_t s) { return (s & c.set) != 0; })) continue;
      chosen.push_back(c.set);
      centers.push_back(v);
      radii.push_back(c.radius);
      if (rec(v + 1, acc & c.set)) return true;
      chosen.pop_back();
      centers.pop_back();
      radii.pop_back();
    }
    return false;
  };
  return rec(0, universe);
}

// Distinct nonempty proper subsets N^r[v] ∩ universe, r = 0..e(v).
std::vector<std::vector<Candidate>> ball_candidates(const std::vector<std::vector<int>>& d, std::uint64_t universe) {
  const std::size_t n = d.size();
  std::vector<std::vector<Candidate>> cands(n);
  for (std::size_t v = 0; v < n; ++v) {
    int ecc = *std::max_element(d[v].begin(), d[v].end());
    std::uint64_t prev = 0;
    for (int r = 0; r <= ecc; ++r) {
      std::uint64_t s = 0;
      for (std::size_t w = 0; w < n; ++w)
        if (d[v][w] <= r) s |= std::uint64_t{1} << w;
      s &= universe;
      if (s == 0 || s == prev || s == universe) continue;
      cands[v].push_back({s, r});
      prev = s;
    }
  }
  return cands;
}

std::vector<std::vector<int>> connected_distances(const Graph& g) {
  auto d = all_pairs_distances(g);
  for (Vertex v = 0; v < g.order(); ++v)
    if (d[0][static_cast<std::size_t>(v)] == kUnreached) throw NotConnected({v});
  return d;
}

// Family of sets {w in universe : d(c, w) <= r} violates the Helly property.
bool family_violates(const Graph& g, const std::vector<Vertex>& centers, const std::vector<int>& radii,
                     const std::vector<char>& universe) {
  if (centers.size() != radii.size() || centers.empty()) return false;
  std::vector<Distances> dist;
  for (Vertex c : centers) {
    if (!g.contains(c)) return false;
    dist.push_back(bfs(g, {c}));
  }
  auto inside = [&](std::size_t a, Vertex w) {
    return universe[static_cast<std::size_t>(w)] && dist[a][static_cast<std::size_t>(w)] != kUnreached &&
           dist[a][static_cast<std::size_t>(w)] <= radii[a];
  };
  for (std::size_t a = 0; a < centers.size(); ++a)
    for (std::size_t b = a + 1; b < centers.size(); ++b) {
      bool meet = false;
      for (Vertex w = 0; w < g.order() && !meet; ++w) meet = inside(a, w) && inside(b, w);
      if (!meet) return false;
    }
  for (Vertex w = 0; w < g.order(); ++w) {
    bool all = true;
    for (std::size_t a = 0; a < centers.size() && all; ++a) all = inside(a, w);
    if (all) return false;
  }
  return true;
}

Verdict half_ball_failure(int side, std::vector<Vertex> centers, std::vector<int> radii) {
  return Verdict::fail("half-balls on side " + std::to_string(side) + " pairwise meet with empty intersection",
                       std::move(centers), std::move(radii));
}

Verdict half_ball_sampled(const Graph& g, const Bipartition& bp, const HalfBallOptions& opts) {
  const Vertex n = g.order();
  if (n < 3) return Verdict::sampled();
  Rng rng(opts.seed, "half-ball-helly");
  BfsScratch scratch(n);
  std::vector<Distances> dist;
  std::vector<int> ecc;
  for (std::int64_t t = 0; t < opts.trials; ++t) {
    const int side = static_cast<int>(rng.below(2));
    const auto& part = bp.part[static_cast<std::size_t>(side)];
    const auto k = static_cast<std::size_t>(rng.between(3, std::min<Vertex>(n, 8)));
    std::set<Vertex> picked;
    while (picked.size() < k) picked.insert(static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n))));
    std::vector<Vertex> centers(picked.begin(), picked.end());

    dist.assign(k, {});
    ecc.assign(k, 0);
    std::vector<int> radii(k);
    for (std::size_t a = 0; a < k; ++a) {
      Vertex src[] = {centers[a]};
      scratch.run(g, src);
      dist[a].resize(static_cast<std::size_t>(n));
      for (Vertex w = 0; w < n; ++w) dist[a][static_cast<std::size_t>(w)] = scratch.dist(w);
      ecc[a] = scratch.depth();
      // Only radii of the side's parity give distinct half-balls.
      int r = bp.side[static_cast<std::size_t>(centers[a])] == side ? 0 : 1;
      while (rng.bernoulli(0.5)) r += 2;
      radii[a] = std::min(r, ecc[a] + 1);
    }
    auto meet = [&](std::size_t a, std::size_t b) {
      for (Vertex w : part)
        if (dist[a][static_cast<std::size_t>(w)] <= radii[a] && dist[b][static_cast<std::size_t>(w)] <= radii[b]) return true;
      return false;
    };
    // Grow radii until the family pairwise meets; violations sit at the
    // smallest such radii.
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) {
          if (meet(a, b)) continue;
          std::size_t grow = rng.below(2) ? a : b;
          if (radii[grow] >= ecc[grow]) grow = grow == a ? b : a;
          radii[grow] += 2;
          changed = true;
        }
    }
    bool common = false;
    for (Vertex w : part) {
      bool all = true;
      for (std::size_t a = 0; a < k && all; ++a) all = dist[a][static_cast<std::size_t>(w)] <= radii[a];
      if (all) {
        common = true;
        break;
      }
    }
    if (!common) return half_ball_failure(side, std::move(centers), std::move(radii));
  }
  return Verdict::sampled();
}

}  // namespace

Verdict half_ball_helly_sample(const Graph& g, const HalfBallOptions& opts) {
  Bipartition bp = bipartition(g);
  const Vertex n = g.order();
  if (!(opts.exhaustive && n <= 8)) return half_ball_sampled(g, bp, opts);
  auto d = connected_distances(g);
  for (int side = 0; side < 2; ++side) {
    std::uint64_t universe = 0;
    for (Vertex v : bp.part[static_cast<std::size_t>(side)]) universe |= std::uint64_t{1} << v;
    if (universe == 0) continue;
    std::vector<Vertex> centers;
    std::vector<int> radii;
    if (search_violation(ball_candidates(d, universe), universe, centers, radii))
      return half_ball_failure(side, std::move(centers), std::move(radii));
  }
  return Verdict::pass();
}

bool half_balls_violate_helly(const Graph& g, const std::vector<Vertex>& centers, const std::vector<int>& radii) {
  Bipartition bp = bipartition(g);
  for (int side = 0; side < 2; ++side) {
    std::vector<char> universe(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : bp.part[static_cast<std::size_t>(side)]) universe[static_cast<std::size_t>(v)] = 1;
    if (family_violates(g, centers, radii, universe)) return true;
  }
  return false;
}

Verdict is_helly_small(const Graph& g, Vertex limit) {
  if (g.order() > limit || g.order() > 64) {
    throw SizeLimit("exhaustive Helly check limited to " + std::to_string(limit) + " vertices");
  }
  auto d = connected_distances(g);
  const auto n = static_cast<std::size_t>(g.order());
  std::uint64_t universe = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<Vertex> centers;
  std::vector<int> radii;
  if (search_violation(ball_candidates(d, universe), universe, centers, radii)) {
    return Verdict::fail("balls pairwise meet with empty intersection", std::move(centers), std::move(radii));
  }
  return Verdict::pass();
}

bool balls_violate_helly(const Graph& g, const std::vector<Vertex>& centers, const std::vector<int>& radii) {
  return family_violates(g, centers, radii, std::vector<char>(static_cast<std::size_t>(g.order()), 1));
}

Verdict isometric_check(const Graph& g, const Graph& h, const std::vector<Vertex>& map) {
  if (map.size() != static_cast<std::size_t>(g.order())) throw InvalidArgument("isometric_check: map size differs from |V(g)|");
  std::vector<char> hit(static_cast<std::size_t>(h.order()), 0);
  for (Vertex x : map) {
    if (!h.contains(x)) throw InvalidArgument("isometric_check: image " + std::to_string(x) + " out of range");
    if (hit[static_cast<std::size_t>(x)]++) throw InvalidArgument("isometric_check: map is not injective");
  }
  BfsScratch in_g(g.order()), in_h(h.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    Vertex su[] = {u}, sh[] = {map[static_cast<std::size_t>(u)]};
    in_g.run(g, su);
    in_h.run(h, sh);
    for (Vertex v = u + 1; v < g.order(); ++v) {
      int dg = in_g.dist(v), dh = in_h.dist(map[static_cast<std::size_t>(v)]);
      if (dg != dh) {
        return Verdict::fail("d_g(" + std::to_string(u) + ", " + std::to_string(v) + ") = " + std::to_string(dg) +
                                 " but the images are at distance " + std::to_string(dh),
                             {u, v}, {dg, dh});
      }
    }
  }
  return Verdict::pass();
}

Verdict is_chordal_bipartite_small(const Graph& g, Vertex limit) {
  const Vertex n = g.order();
  if (n > limit || n > 64) {
    throw SizeLimit("exhaustive chordal bipartite check limited to " + std::to_string(limit) + " vertices");
  }
  // Two-colour every component; an odd cycle is reported as the witness.
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  for (Vertex s = 0; s < n; ++s) {
    if (colour[static_cast<std::size_t>(s)] != -1) continue;
    colour[static_cast<std::size_t>(s)] = 0;
    std::vector<Vertex> queue{s};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      Vertex v = queue[h];
      for (Vertex w : g.neighbors(v)) {
        if (colour[static_cast<std::size_t>(w)] == -1) {
          colour[static_cast<std::size_t>(w)] = 1 - colour[static_cast<std::size_t>(v)];
          parent[static_cast<std::size_t>(w)] = v;
          depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
          queue.push_back(w);
        } else if (colour[static_cast<std::size_t>(w)] == colour[static_cast<std::size_t>(v)]) {
          std::vector<Vertex> left{v}, right{w};
          while (left.back() != right.back()) {
            if (depth[static_cast<std::size_t>(left.back())] >= depth[static_cast<std::size_t>(right.back())])
              left.push_back(parent[static_cast<std::size_t>(left.back())]);
            else
              right.push_back(parent[static_cast<std::size_t>(right.back())]);
          }
          right.pop_back();
          left.insert(left.end(), right.rbegin(), right.rend());
          std::string detail = "odd cycle of length " + std::to_string(left.size());
          return Verdict::fail(std::move(detail), std::move(left));
        }
      }
    }
  }

  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << w;
  // Induced paths whose vertices all exceed the start s; interior is the set
  // of path vertices other than s and the endpoint.
  std::vector<Vertex> path;
  std::function<bool(std::uint64_t, std::uint64_t)> extend = [&](std::uint64_t on_path, std::uint64_t interior) {
    const Vertex s = path.front(), last = path.back();
    for (Vertex w : g.neighbors(last)) {
      if (w <= s || (on_path >> w & 1)) continue;
      if (adj[static_cast<std::size_t>(w)] & interior) continue;
      if (path.size() >= 2 && (adj[static_cast<std::size_t>(w)] >> s & 1)) {
        if (path.size() + 1 >= 6) {
          path.push_back(w);
          return true;
        }
        continue;
      }
      std::uint64_t grown = path.size() >= 2 ? interior | std::uint64_t{1} << last : interior;
      path.push_back(w);
      if (extend(on_path | std::uint64_t{1} << w, grown)) return true;
      path.pop_back();
    }
    return false;
  };
  for (Vertex s = 0; s < n; ++s) {
    path.assign(1, s);
    if (extend(std::uint64_t{1} << s, 0)) {
      std::string detail = "induced cycle of length " + std::to_string(path.size());
      return Verdict::fail(std::move(detail), std::move(path));
    }
  }
  return Verdict::pass();
}

bool is_induced_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
  const std::size_t len = cycle.size();
  if (len < 3) return false;
  std::vector<Vertex> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < len; ++i) {
    if (!g.contains(cycle[i])) return false;
    for (std::size_t j = i + 1; j < len; ++j) {
      bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
      if (g.has_edge(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

}  // namespace arx
