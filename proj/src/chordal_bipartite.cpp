#include "arx/chordal_bipartite.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "arx/bfs.hpp"
#include "arx/instrument.hpp"

namespace arx {
namespace detail {

CliqueStructure::CliqueStructure(const HalfSquareView& view, const CliqueTree& t) {
  const Graph& g = view.base();
  auto verts = view.vertices();
  ns = static_cast<Vertex>(verts.size());
  nc = static_cast<int>(t.cliques.size());
  global.assign(verts.begin(), verts.end());
  local.assign(static_cast<std::size_t>(g.order()), -1);
  for (Vertex i = 0; i < ns; ++i) local[global[i]] = i;

  members.clear();
  std::vector<std::size_t> deg(static_cast<std::size_t>(ns) + 1, 0);
  std::vector<Edge> inc;
  for (int c = 0; c < nc; ++c) {
    for (Vertex v : t.cliques[static_cast<std::size_t>(c)]) {
      Vertex y = local[v];
      if (y < 0) throw InvalidArgument("clique tree does not match the half-square side");
      members.items.push_back(y);
      ++deg[static_cast<std::size_t>(y) + 1];
      inc.emplace_back(y, ns + c);
    }
    members.close();
  }
  containing.offsets.assign(deg.size(), 0);
  for (std::size_t i = 1; i < deg.size(); ++i) containing.offsets[i] = containing.offsets[i - 1] + deg[i];
  containing.items.resize(members.items.size());
  auto fill = containing.offsets;
  for (int c = 0; c < nc; ++c)
    for (Vertex y : members[static_cast<std::size_t>(c)]) containing.items[fill[static_cast<std::size_t>(y)]++] = c;

  parent = t.parent;
  top.assign(static_cast<std::size_t>(ns), -1);
  for (Vertex y = 0; y < ns; ++y) {
    auto k = containing[static_cast<std::size_t>(y)];
    if (k.empty()) throw InvalidArgument("vertex " + std::to_string(global[y]) + " lies in no clique");
    top[static_cast<std::size_t>(y)] = k[0];
  }
  incidence = Graph::from_edges(ns + nc, inc);
  incidence_side.assign(static_cast<std::size_t>(ns + nc), 1);
  std::fill(incidence_side.begin(), incidence_side.begin() + ns, 0);
}

std::vector<int> CliqueStructure::distances(std::span<const Vertex> sources) const {
  auto d = bfs(incidence, sources);
  d.resize(static_cast<std::size_t>(ns));
  for (int& x : d)
    if (x != kUnreached) x /= 2;
  return d;
}

std::vector<int> CliqueStructure::closed_neighbours_in(const std::vector<char>& in_x) const {
  // N[y] is the union of the cliques containing y. Counting each x once: x is
  // charged to top(x), and a clique K != top(y) on the subtree of y only sees
  // members whose own top is K (the others are in its parent, hence in the
  // subtree or already counted through top(y)).
  std::vector<int> a(static_cast<std::size_t>(nc), 0), b(static_cast<std::size_t>(nc), 0);
  for (int c = 0; c < nc; ++c) {
    for (Vertex x : members[static_cast<std::size_t>(c)]) {
      if (!in_x[static_cast<std::size_t>(x)]) continue;
      ++a[static_cast<std::size_t>(c)];
      if (top[static_cast<std::size_t>(x)] == c) ++b[static_cast<std::size_t>(c)];
    }
  }
  std::vector<int> out(static_cast<std::size_t>(ns), 0);
  for (Vertex y = 0; y < ns; ++y) {
    int ty = top[static_cast<std::size_t>(y)];
    int s = a[static_cast<std::size_t>(ty)];
    for (int c : containing[static_cast<std::size_t>(y)])
      if (c != ty) s += b[static_cast<std::size_t>(c)];
    out[static_cast<std::size_t>(y)] = s;
  }
  ops::add(members.items.size() * 2 + static_cast<std::size_t>(ns + nc));
  return out;
}

CliqueStructure::Gates CliqueStructure::gates(std::span<const Vertex> x) const {
  Gates out;
  out.level = distances(x);
  out.gate.assign(static_cast<std::size_t>(ns), -1);
  std::vector<char> in_x(static_cast<std::size_t>(ns), 0);
  for (Vertex v : x) in_x[static_cast<std::size_t>(v)] = 1;
  auto first = closed_neighbours_in(in_x);

  int max_level = 0;
  for (int l : out.level) max_level = std::max(max_level, l);
  std::vector<std::vector<Vertex>> by_level(static_cast<std::size_t>(max_level) + 1);
  for (Vertex v = 0; v < ns; ++v) {
    if (out.level[static_cast<std::size_t>(v)] == kUnreached) throw NotConnected({global[v]});
    by_level[static_cast<std::size_t>(out.level[static_cast<std::size_t>(v)])].push_back(v);
  }
  std::vector<int> lmin(static_cast<std::size_t>(nc), std::numeric_limits<int>::max());
  for (int c = 0; c < nc; ++c)
    for (Vertex y : members[static_cast<std::size_t>(c)])
      lmin[static_cast<std::size_t>(c)] = std::min(lmin[static_cast<std::size_t>(c)], out.level[static_cast<std::size_t>(y)]);
  std::vector<std::vector<int>> cliques_by_lmin(static_cast<std::size_t>(max_level) + 1);
  for (int c = 0; c < nc; ++c) cliques_by_lmin[static_cast<std::size_t>(lmin[static_cast<std::size_t>(c)])].push_back(c);

  // pr[v] = |N[gate chain end] ∩ X|; the gate dominates the deepest part of
  // X reachable from v, so larger is better.
  std::vector<int> pr(static_cast<std::size_t>(ns), 0);
  std::vector<Vertex> best(static_cast<std::size_t>(nc), -1);
  auto better = [&](Vertex a, Vertex b) {
    if (b < 0) return true;
    int pa = pr[static_cast<std::size_t>(a)], pb = pr[static_cast<std::size_t>(b)];
    return pa > pb || (pa == pb && a < b);
  };
  if (max_level >= 1) {
    for (Vertex v : by_level[1]) {
      out.gate[static_cast<std::size_t>(v)] = v;
      pr[static_cast<std::size_t>(v)] = first[static_cast<std::size_t>(v)];
    }
  }
  std::uint64_t work = 0;
  for (int d = 2; d <= max_level; ++d) {
    for (int c : cliques_by_lmin[static_cast<std::size_t>(d - 1)]) {
      Vertex b = -1;
      for (Vertex y : members[static_cast<std::size_t>(c)])
        if (out.level[static_cast<std::size_t>(y)] == d - 1 && better(y, b)) b = y;
      best[static_cast<std::size_t>(c)] = b;
      work += members[static_cast<std::size_t>(c)].size();
    }
    for (Vertex v : by_level[static_cast<std::size_t>(d)]) {
      Vertex x0 = -1;
      for (int c : containing[static_cast<std::size_t>(v)]) {
        if (lmin[static_cast<std::size_t>(c)] != d - 1) continue;
        Vertex b = best[static_cast<std::size_t>(c)];
        if (better(b, x0)) x0 = b;
      }
      work += containing[static_cast<std::size_t>(v)].size();
      if (x0 < 0) throw GateMissing("no clique towards the source set", {global[v]});
      pr[static_cast<std::size_t>(v)] = pr[static_cast<std::size_t>(x0)];
      out.gate[static_cast<std::size_t>(v)] = d == 2 ? x0 : out.gate[static_cast<std::size_t>(x0)];
    }
  }
  ops::add(work);
  return out;
}

std::vector<Vertex> CliqueStructure::far_witnesses(Vertex c, int r, const std::vector<int>& dist_c) const {
  std::vector<Vertex> closed;
  std::vector<char> in_closed(static_cast<std::size_t>(ns), 0);
  for (int k : containing[static_cast<std::size_t>(c)])
    for (Vertex y : members[static_cast<std::size_t>(k)])
      if (!in_closed[static_cast<std::size_t>(y)]) {
        in_closed[static_cast<std::size_t>(y)] = 1;
        closed.push_back(y);
      }
  auto gt = gates(closed);
  auto h = closed_neighbours_in(in_closed);
  std::vector<Vertex> best_h(static_cast<std::size_t>(nc), -1);
  for (int k = 0; k < nc; ++k) {
    Vertex b = -1;
    for (Vertex y : members[static_cast<std::size_t>(k)])
      if (b < 0 || h[static_cast<std::size_t>(y)] > h[static_cast<std::size_t>(b)] ||
          (h[static_cast<std::size_t>(y)] == h[static_cast<std::size_t>(b)] && y < b))
        b = y;
    best_h[static_cast<std::size_t>(k)] = b;
  }
  std::vector<char> taken(static_cast<std::size_t>(ns), 0);
  std::vector<Vertex> out;
  auto add = [&](Vertex y) {
    if (!taken[static_cast<std::size_t>(y)]) {
      taken[static_cast<std::size_t>(y)] = 1;
      out.push_back(y);
    }
  };
  for (Vertex v = 0; v < ns; ++v) {
    int d = dist_c[static_cast<std::size_t>(v)];
    if (d == r) {
      add(gt.gate[static_cast<std::size_t>(v)]);
    } else if (d == r - 1) {
      Vertex star = gt.gate[static_cast<std::size_t>(v)];
      Vertex pick = -1;
      for (int k : containing[static_cast<std::size_t>(star)]) {
        Vertex b = best_h[static_cast<std::size_t>(k)];
        if (pick < 0 || h[static_cast<std::size_t>(b)] > h[static_cast<std::size_t>(pick)] ||
            (h[static_cast<std::size_t>(b)] == h[static_cast<std::size_t>(pick)] && b < pick))
          pick = b;
      }
      add(pick);
    }
  }
  ops::add(members.items.size() + static_cast<std::size_t>(ns));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Vertex farthest(const std::vector<int>& d) {
  Vertex best = 0;
  for (Vertex v = 1; v < static_cast<Vertex>(d.size()); ++v)
    if (d[static_cast<std::size_t>(v)] > d[static_cast<std::size_t>(best)]) best = v;
  return best;
}

// Index of a clique containing all of `set`, or -1.
int clique_holding(const CliqueStructure& cs, std::span<const Vertex> set) {
  std::vector<int> hits(static_cast<std::size_t>(cs.nc), 0);
  for (Vertex y : set)
    for (int k : cs.containing[static_cast<std::size_t>(y)])
      if (++hits[static_cast<std::size_t>(k)] == static_cast<int>(set.size())) return k;
  return set.empty() ? 0 : -1;
}

}  // namespace

Vertex CliqueStructure::central_vertex() const {
  if (ns == 1) return 0;
  const Vertex zero = 0;
  Vertex u = farthest(distances(std::span<const Vertex>(&zero, 1)));
  auto du = distances(std::span<const Vertex>(&u, 1));
  Vertex w = farthest(du);
  const int e = du[static_cast<std::size_t>(w)];
  auto dw = distances(std::span<const Vertex>(&w, 1));

  std::vector<int> radii;
  for (int r : {(e + 1) / 2, (e + 2) / 2, 1 + (e + 1) / 2})
    if (r <= e && std::find(radii.begin(), radii.end(), r) == radii.end()) radii.push_back(r);

  for (int r : radii) {
    std::vector<Vertex> slice;
    for (Vertex x = 0; x < ns; ++x)
      if (dw[static_cast<std::size_t>(x)] == r && du[static_cast<std::size_t>(x)] == e - r) slice.push_back(x);
    if (slice.empty()) continue;
    if (clique_holding(*this, slice) < 0) {
      throw NoCentralVertexFound("slice at distance " + std::to_string(r) + " is not a clique");
    }
    auto gt = gates(slice);
    std::vector<char> in_s(static_cast<std::size_t>(ns), 0);
    int s_size = 0;
    for (Vertex v = 0; v < ns; ++v) {
      if (gt.level[static_cast<std::size_t>(v)] != r) continue;
      Vertex gv = gt.gate[static_cast<std::size_t>(v)];
      if (gv >= 0 && !in_s[static_cast<std::size_t>(gv)]) {
        in_s[static_cast<std::size_t>(gv)] = 1;
        ++s_size;
      }
    }
    if (s_size == 0) return slice.front();
    auto cnt = closed_neighbours_in(in_s);
    for (Vertex c : slice)
      if (cnt[static_cast<std::size_t>(c)] == s_size) return c;
  }
  throw NoCentralVertexFound("no slice vertex dominates the gates of the farthest vertices");
}

}  // namespace detail

namespace {

// {v on side s : d_H(v, b) <= k for all b in targets} through the base graph.
std::vector<Vertex> within_half(const HalfSquareView& view, std::span<const Vertex> targets, int k) {
  return within_k_of_all(view, targets, 2 * k, view.side());
}

std::vector<Vertex> to_global(const detail::CliqueStructure& cs, std::span<const Vertex> loc) {
  std::vector<Vertex> out;
  out.reserve(loc.size());
  for (Vertex y : loc) out.push_back(cs.global[static_cast<std::size_t>(y)]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> center_global(const detail::CliqueStructure& cs, const HalfSquareView& view, Vertex c,
                                  const std::vector<int>& dist_c, int rad) {
  if (rad == 0) return {cs.global[static_cast<std::size_t>(c)]};
  if (rad <= 2) return within_half(view, view.vertices(), rad);
  auto b = cs.far_witnesses(c, rad, dist_c);
  b.push_back(c);
  auto bg = to_global(cs, b);
  return within_half(view, bg, 2);
}

}  // namespace

GateTable gates(const CliqueTree& t, const HalfSquareView& view, std::span<const Vertex> clique) {
  detail::CliqueStructure cs(view, t);
  std::vector<Vertex> loc;
  for (Vertex v : clique) {
    if (!view.on_side(v)) throw InvalidArgument("gates: vertex " + std::to_string(v) + " not on the side");
    loc.push_back(cs.local[static_cast<std::size_t>(v)]);
  }
  if (loc.empty()) throw InvalidArgument("gates: empty clique");
  if (detail::clique_holding(cs, loc) < 0) throw InvalidArgument("gates: set is not a clique");
  auto gt = cs.gates(loc);
  GateTable out;
  const auto n = static_cast<std::size_t>(view.base().order());
  out.dist.assign(n, kUnreached);
  out.gate.assign(n, -1);
  for (Vertex y = 0; y < cs.ns; ++y) {
    Vertex v = cs.global[static_cast<std::size_t>(y)];
    out.dist[static_cast<std::size_t>(v)] = gt.level[static_cast<std::size_t>(y)];
    Vertex gy = gt.gate[static_cast<std::size_t>(y)];
    out.gate[static_cast<std::size_t>(v)] = gy < 0 ? -1 : cs.global[static_cast<std::size_t>(gy)];
  }
  return out;
}

Vertex central_vertex(const CliqueTree& t, const HalfSquareView& view) {
  detail::CliqueStructure cs(view, t);
  return cs.global[static_cast<std::size_t>(cs.central_vertex())];
}

std::vector<Vertex> center_set(const CliqueTree& t, const HalfSquareView& view) {
  detail::CliqueStructure cs(view, t);
  Vertex c = cs.central_vertex();
  auto dc = cs.distances(std::span<const Vertex>(&c, 1));
  int rad = *std::max_element(dc.begin(), dc.end());
  return center_global(cs, view, c, dc, rad);
}

ChordalEccentricities all_eccentricities_detail(const Graph& g) {
  require_connected(g);
  ChordalEccentricities out;
  const auto n = static_cast<std::size_t>(g.order());
  if (n == 1) {
    out.ecc = {0};
    out.halves.ecc = {std::vector<int>{0}, std::vector<int>{}};
    out.halves.rad = {0, -1};
    out.halves.center[0] = {0};
    out.halves.peripherals[0] = {0};
    out.trees[0].cliques = {{0}};
    out.trees[0].parent = {-1};
    out.trees[1].side = 1;
    return out;
  }
  auto parts = std::make_shared<const Bipartition>(bipartition(g));
  std::array<std::unique_ptr<detail::CliqueStructure>, 2> cs;
  std::array<std::vector<int>, 2> cdist;  // local distances from the central vertex
  std::array<Vertex, 2> central{};
  for (int s = 0; s < 2; ++s) {
    HalfSquareView view(g, parts, s);
    out.trees[static_cast<std::size_t>(s)] = clique_tree(view);
    cs[static_cast<std::size_t>(s)] = std::make_unique<detail::CliqueStructure>(view, out.trees[static_cast<std::size_t>(s)]);
    auto& c = *cs[static_cast<std::size_t>(s)];
    Vertex cv = c.central_vertex();
    central[static_cast<std::size_t>(s)] = cv;
    auto dc = c.distances(std::span<const Vertex>(&cv, 1));
    int rad = *std::max_element(dc.begin(), dc.end());
    auto center = center_global(c, view, cv, dc, rad);
    cdist[static_cast<std::size_t>(s)] = std::move(dc);

    std::vector<Vertex> center_local;
    for (Vertex v : center) center_local.push_back(c.local[static_cast<std::size_t>(v)]);
    auto dcenter = c.distances(center_local);
    auto& ecc = out.halves.ecc[static_cast<std::size_t>(s)];
    ecc.assign(n, -1);
    int diam = 0;
    for (Vertex y = 0; y < c.ns; ++y) {
      int e = dcenter[static_cast<std::size_t>(y)] + rad;
      ecc[static_cast<std::size_t>(c.global[static_cast<std::size_t>(y)])] = e;
      diam = std::max(diam, e);
    }
    for (Vertex v : parts->part[static_cast<std::size_t>(s)])
      if (ecc[static_cast<std::size_t>(v)] == diam) out.halves.peripherals[static_cast<std::size_t>(s)].push_back(v);
    out.halves.diam[static_cast<std::size_t>(s)] = diam;
    out.halves.rad[static_cast<std::size_t>(s)] = rad;
    out.halves.center[static_cast<std::size_t>(s)] = std::move(center);
  }

  out.ecc.assign(n, 0);
  for (int i = 0; i < 2; ++i) {
    const int o = 1 - i;
    const int r = out.halves.rad[static_cast<std::size_t>(o)];
    const auto& center_o = out.halves.center[static_cast<std::size_t>(o)];
    std::vector<char> in_center(n, 0);
    for (Vertex v : center_o) in_center[static_cast<std::size_t>(v)] = 1;

    // Vertices of side i that reach the resolver: e_{H_i}(v) = r and N(v) in C(H_o).
    bool needed = false;
    for (Vertex v : parts->part[static_cast<std::size_t>(i)]) {
      if (out.halves.ecc[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] != r) continue;
      auto nb = g.neighbors(v);
      if (std::all_of(nb.begin(), nb.end(), [&](Vertex u) { return in_center[static_cast<std::size_t>(u)]; })) {
        needed = true;
        break;
      }
    }
    std::vector<char> good(n, 0);
    if (needed && r > 0) {
      std::vector<Vertex> hits;
      if (r <= 2) {
        hits = within_k_of_all(g, parts->side, parts->part[static_cast<std::size_t>(o)], 2 * r - 1, i);
      } else {
        auto& c = *cs[static_cast<std::size_t>(o)];
        std::vector<char> in_c(static_cast<std::size_t>(c.ns), 0);
        for (Vertex v : center_o) in_c[static_cast<std::size_t>(c.local[static_cast<std::size_t>(v)])] = 1;
        auto cnt = c.closed_neighbours_in(in_c);
        Vertex pick = -1;
        for (Vertex v : center_o) {
          Vertex y = c.local[static_cast<std::size_t>(v)];
          if (cnt[static_cast<std::size_t>(y)] == static_cast<int>(center_o.size())) {
            pick = y;
            break;
          }
        }
        if (pick < 0) throw NoCentralVertexFound("center of the other half-square is not a clique");
        auto dp = c.distances(std::span<const Vertex>(&pick, 1));
        auto w = to_global(c, c.far_witnesses(pick, r, dp));
        hits = within_k_of_all(g, parts->side, w, 3, i);
      }
      for (Vertex v : hits) good[static_cast<std::size_t>(v)] = 1;
    }
    Case2Resolver resolve = [&](Vertex v) {
      if (r == 0) return 1;
      return good[static_cast<std::size_t>(v)] ? 2 * r : 2 * r + 1;
    };
    for (Vertex v : parts->part[static_cast<std::size_t>(i)]) {
      bool anomalous = false;
      out.ecc[static_cast<std::size_t>(v)] = eccentricity_cases(g, *parts, v, out.halves, resolve, &anomalous);
      if (anomalous) ++out.anomalies;
    }
  }
  return out;
}

std::vector<int> all_eccentricities_chordal_bipartite(const Graph& g) {
  return all_eccentricities_detail(g).ecc;
}

}  // namespace arx
