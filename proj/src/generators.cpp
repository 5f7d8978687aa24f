#include "arx/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "arx/errors.hpp"

namespace arx {

std::vector<Interval> random_intervals(Vertex n, Seed seed, ChordalBipartiteOptions opts) {
  if (n < 1) throw InvalidArgument("gen_chordal_bipartite: need at least one interval");
  if (opts.span < 0 || opts.slack < 0) throw InvalidArgument("gen_chordal_bipartite: negative option");
  Rng rng(seed, "chordal-bipartite");
  std::vector<Interval> iv;
  iv.reserve(static_cast<std::size_t>(n));
  int lo = 0, max_hi = 0;
  for (Vertex i = 0; i < n; ++i) {
    if (i > 0) {
      int from = std::max(lo, max_hi - opts.slack);
      lo = static_cast<int>(rng.between(from, max_hi));
    }
    int hi = lo + static_cast<int>(rng.between(0, opts.span));
    iv.push_back({lo, hi});
    max_hi = std::max(max_hi, hi);
  }
  return iv;
}

std::vector<std::vector<Vertex>> interval_maximal_cliques(const std::vector<Interval>& iv) {
  // Events sorted by coordinate; at equal coordinates starts come first
  // because closed intervals touching at a point intersect.
  struct Event {
    int x;
    int kind;  // 0 = start, 1 = end
    Vertex id;
  };
  std::vector<Event> ev;
  ev.reserve(iv.size() * 2);
  for (std::size_t i = 0; i < iv.size(); ++i) {
    ev.push_back({iv[i].lo, 0, static_cast<Vertex>(i)});
    ev.push_back({iv[i].hi, 1, static_cast<Vertex>(i)});
  }
  std::sort(ev.begin(), ev.end(), [](const Event& a, const Event& b) {
    return std::tie(a.x, a.kind, a.id) < std::tie(b.x, b.kind, b.id);
  });
  std::set<Vertex> active;
  bool grown = false;
  std::vector<std::vector<Vertex>> cliques;
  for (const Event& e : ev) {
    if (e.kind == 0) {
      active.insert(e.id);
      grown = true;
    } else {
      if (grown) {
        cliques.emplace_back(active.begin(), active.end());
        grown = false;
      }
      active.erase(e.id);
    }
  }
  return cliques;
}

Graph gen_chordal_bipartite(Vertex n_intervals, Seed seed, ChordalBipartiteOptions opts) {
  auto iv = random_intervals(n_intervals, seed, opts);
  auto cliques = interval_maximal_cliques(iv);
  std::vector<Edge> edges;
  Vertex next = n_intervals;
  for (const auto& k : cliques) {
    for (Vertex v : k) edges.emplace_back(v, next);
    ++next;
  }
  return Graph::from_edges(next, edges);
}

SplitInstance gen_split(Vertex n, double density, Seed seed) {
  if (n < 2) throw InvalidArgument("gen_split: n must be at least 2");
  if (!(density >= 0.0 && density <= 1.0)) throw InvalidArgument("gen_split: density outside [0,1]");
  Rng rng(seed, "split");
  Vertex k = static_cast<Vertex>(rng.between(1, n - 1));
  std::vector<Vertex> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  for (Vertex i = n - 1; i > 0; --i) {
    std::swap(label[i], label[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  }
  std::vector<Edge> edges;
  for (Vertex a = 0; a < k; ++a)
    for (Vertex b = a + 1; b < k; ++b) edges.emplace_back(label[a], label[b]);
  for (Vertex s = k; s < n; ++s) {
    Vertex forced = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(k)));
    for (Vertex a = 0; a < k; ++a) {
      if (a == forced || rng.bernoulli(density)) edges.emplace_back(label[s], label[a]);
    }
  }
  SplitInstance out;
  out.graph = Graph::from_edges(n, edges);
  out.clique.assign(label.begin(), label.begin() + k);
  out.stable.assign(label.begin() + k, label.end());
  std::sort(out.clique.begin(), out.clique.end());
  std::sort(out.stable.begin(), out.stable.end());
  return out;
}

Graph random_tree(Vertex n, Seed seed) {
  if (n < 1) throw InvalidArgument("random_tree: n must be positive");
  if (n == 1) return Graph::from_edges(1, std::vector<Edge>{});
  if (n == 2) return Graph::from_edges(2, std::vector<Edge>{{0, 1}});
  Rng rng(seed, "tree");
  std::vector<Vertex> code(static_cast<std::size_t>(n - 2));
  for (auto& c : code) c = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
  std::vector<Vertex> degree(static_cast<std::size_t>(n), 1);
  for (Vertex c : code) ++degree[c];
  // Linear Pruefer decoding.
  std::vector<Edge> edges;
  Vertex ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  Vertex leaf = ptr;
  for (Vertex c : code) {
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1 && c < ptr) {
      leaf = c;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return Graph::from_edges(n, edges);
}

Graph random_connected(Vertex n, std::int64_t extra, Seed seed) {
  Graph t = random_tree(n, seed);
  auto edges = t.edges();
  std::int64_t max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
  extra = std::min(extra, max_edges - static_cast<std::int64_t>(edges.size()));
  std::set<Edge> present(edges.begin(), edges.end());
  Rng rng(seed, "extra-edges");
  while (extra > 0) {
    Vertex u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
    Vertex v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (present.insert({u, v}).second) {
      edges.emplace_back(u, v);
      --extra;
    }
  }
  return Graph::from_edges(n, edges);
}

Graph gen_kchromatic_candidate(Vertex tree_order, int k, Vertex extensions, double density, Seed seed) {
  if (tree_order < 1 || k < 1 || extensions < 0) throw InvalidArgument("gen_kchromatic_candidate: bad sizes");
  Graph t = random_tree(tree_order, seed);
  const Vertex n = tree_order * k + extensions;
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  auto join = [&](Vertex a, Vertex b) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  };
  for (Vertex a = 0; a < tree_order; ++a) {
    for (int c = 0; c < k; ++c) {
      for (int c2 = c + 1; c2 < k; ++c2) join(a * k + c, a * k + c2);
    }
    for (Vertex b : t.neighbors(a)) {
      if (b < a) continue;
      for (int c = 0; c < k; ++c)
        for (int c2 = 0; c2 < k; ++c2)
          if (c != c2) join(a * k + c, b * k + c2);
    }
  }
  Rng rng(seed, "covered-extension");
  std::vector<std::uint64_t> mark(static_cast<std::size_t>(n), 0);
  std::uint64_t gen = 0;
  for (Vertex v = tree_order * k; v < n; ++v) {
    Vertex w = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(v)));
    std::vector<Vertex> nb = adj[static_cast<std::size_t>(w)];
    for (std::size_t a = 0; a < nb.size(); ++a)
      std::swap(nb[a], nb[static_cast<std::size_t>(rng.between(static_cast<std::int64_t>(a), static_cast<std::int64_t>(nb.size()) - 1))]);
    std::vector<Vertex> clique;
    for (Vertex x : nb) {
      ++gen;
      for (Vertex y : adj[static_cast<std::size_t>(x)]) mark[static_cast<std::size_t>(y)] = gen;
      if (std::all_of(clique.begin(), clique.end(), [&](Vertex y) { return mark[static_cast<std::size_t>(y)] == gen; }))
        clique.push_back(x);
    }
    std::set<Vertex> chosen(clique.begin(), clique.end());
    for (Vertex x : nb)
      if (rng.bernoulli(density)) chosen.insert(x);
    for (Vertex x : chosen) join(v, x);
  }
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b : adj[static_cast<std::size_t>(a)])
      if (a < b) edges.emplace_back(a, b);
  return Graph::from_edges(n, edges);
}

}  // namespace arx
