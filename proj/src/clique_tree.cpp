#include <algorithm>
#include <numeric>
#include <ostream>
#include <string>

#include "arx/chordal_bipartite.hpp"
#include "arx/instrument.hpp"

namespace arx {

std::vector<std::pair<int, int>> CliqueTree::edges() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 1; i < parent.size(); ++i) out.emplace_back(parent[i], static_cast<int>(i));
  return out;
}

std::int64_t CliqueTree::weight() const {
  std::int64_t w = 0;
  for (const auto& k : cliques) w += static_cast<std::int64_t>(k.size());
  return w;
}

void write_clique_tree(std::ostream& out, const CliqueTree& t) {
  for (std::size_t i = 0; i < t.cliques.size(); ++i) {
    out << i << ':';
    for (Vertex v : t.cliques[i]) out << ' ' << v;
    out << '\n';
  }
  for (auto [a, b] : t.edges()) out << a << ' ' << b << '\n';
}

CliqueTree clique_tree(const HalfSquareView& view) {
  const Graph& g = view.base();
  const auto hv = view.vertices();
  const auto he = view.opposite().vertices();
  CliqueTree out;
  out.side = view.side();
  if (he.empty()) {
    out.cliques = {{hv[0]}};
    out.parent = {-1};
    return out;
  }
  const std::size_t n = static_cast<std::size_t>(g.order());
  std::uint64_t work = 0;

  // Maximum cardinality search over hyperedges. Hyperedge u (a vertex of the
  // other side) is N(u); count[u] = number of its already selected vertices.
  std::vector<int> count(n, 0), edge_index(n, -1), selected_by(n, -1);
  std::vector<Vertex> next(n, -1), prev(n, -1);
  int max_size = 0;
  for (Vertex u : he) max_size = std::max(max_size, static_cast<int>(g.degree(u)));
  std::vector<Vertex> head(static_cast<std::size_t>(max_size) + 1, -1);
  auto unlink = [&](Vertex u) {
    if (prev[u] >= 0) {
      next[prev[u]] = next[u];
    } else {
      head[count[u]] = next[u];
    }
    if (next[u] >= 0) prev[next[u]] = prev[u];
  };
  auto link = [&](Vertex u) {
    prev[u] = -1;
    next[u] = head[count[u]];
    if (next[u] >= 0) prev[next[u]] = u;
    head[count[u]] = u;
  };
  for (auto it = he.rbegin(); it != he.rend(); ++it) link(*it);

  const std::size_t ne = he.size();
  std::vector<Vertex> order;
  order.reserve(ne);
  std::vector<int> old_size(ne), join(ne);
  int best = 0;
  for (std::size_t i = 0; i < ne; ++i) {
    while (head[best] < 0) --best;
    Vertex u = head[best];
    unlink(u);
    edge_index[u] = static_cast<int>(i);
    order.push_back(u);
    int old = 0, f = -1;
    for (Vertex x : g.neighbors(u)) {
      if (selected_by[x] >= 0) {
        ++old;
        f = std::max(f, selected_by[x]);
      }
    }
    if (i > 0 && old == 0) throw NotConnected({u});
    old_size[i] = old;
    join[i] = f;
    for (Vertex x : g.neighbors(u)) {
      if (selected_by[x] >= 0) continue;
      selected_by[x] = static_cast<int>(i);
      auto nb = g.neighbors(x);
      work += nb.size();
      for (Vertex u2 : nb) {
        if (edge_index[u2] >= 0) continue;
        unlink(u2);
        ++count[u2];
        link(u2);
        best = std::max(best, count[u2]);
      }
    }
    work += g.degree(u) * 2;
  }

  // Acyclicity test: the previously selected part of hyperedge i must lie in
  // hyperedge join[i]. Queries are grouped by join index and answered with
  // one stamping pass per hyperedge.
  std::vector<std::size_t> by_join_start(ne + 1, 0);
  for (std::size_t i = 1; i < ne; ++i) ++by_join_start[static_cast<std::size_t>(join[i]) + 1];
  std::partial_sum(by_join_start.begin(), by_join_start.end(), by_join_start.begin());
  std::vector<int> by_join(ne > 0 ? ne - 1 : 0);
  {
    auto fill = by_join_start;
    for (std::size_t i = 1; i < ne; ++i) by_join[fill[static_cast<std::size_t>(join[i])]++] = static_cast<int>(i);
  }
  std::vector<int> stamp(n, -1);
  for (std::size_t j = 0; j < ne; ++j) {
    if (by_join_start[j] == by_join_start[j + 1]) continue;
    for (Vertex x : g.neighbors(order[j])) stamp[x] = static_cast<int>(j);
    for (std::size_t q = by_join_start[j]; q < by_join_start[j + 1]; ++q) {
      int i = by_join[q];
      for (Vertex x : g.neighbors(order[static_cast<std::size_t>(i)])) {
        if (selected_by[x] < i && stamp[x] != static_cast<int>(j)) {
          throw NotDualHypertree("hyperedge N(" + std::to_string(order[static_cast<std::size_t>(i)]) +
                                     ") breaks the running intersection at vertex " + std::to_string(x),
                                 {order[static_cast<std::size_t>(i)], order[j], x});
        }
      }
      work += g.degree(order[static_cast<std::size_t>(i)]);
    }
    work += g.degree(order[j]);
  }

  // Absorb hyperedges contained in a tree neighbour. Along tree edge
  // (i, join[i]) the intersection is exactly the old part of i.
  auto size_of = [&](std::size_t i) { return static_cast<int>(g.degree(order[i])); };
  std::vector<int> target(ne, -1);
  for (std::size_t i = 1; i < ne; ++i) {
    if (old_size[i] == size_of(i)) target[i] = join[i];
  }
  for (std::size_t c = 1; c < ne; ++c) {
    std::size_t p = static_cast<std::size_t>(join[c]);
    if (target[p] < 0 && old_size[c] == size_of(p) && size_of(c) > size_of(p)) target[p] = static_cast<int>(c);
  }
  std::vector<int> rep(ne);
  for (std::size_t i = 0; i < ne; ++i) {
    std::size_t r = i;
    while (target[r] >= 0) r = static_cast<std::size_t>(target[r]);
    rep[i] = static_cast<int>(r);
  }
  // Contracted tree, renumbered breadth-first from the first hyperedge.
  std::vector<std::vector<int>> adj(ne);
  for (std::size_t i = 1; i < ne; ++i) {
    int a = rep[i], b = rep[static_cast<std::size_t>(join[i])];
    if (a != b) {
      adj[static_cast<std::size_t>(a)].push_back(b);
      adj[static_cast<std::size_t>(b)].push_back(a);
    }
  }
  std::vector<int> id(ne, -1), bfs_order{rep[0]};
  id[static_cast<std::size_t>(rep[0])] = 0;
  out.parent.push_back(-1);
  for (std::size_t q = 0; q < bfs_order.size(); ++q) {
    int a = bfs_order[q];
    for (int b : adj[static_cast<std::size_t>(a)]) {
      if (id[static_cast<std::size_t>(b)] >= 0) continue;
      id[static_cast<std::size_t>(b)] = static_cast<int>(bfs_order.size());
      bfs_order.push_back(b);
      out.parent.push_back(id[static_cast<std::size_t>(a)]);
    }
  }
  for (int a : bfs_order) {
    auto nb = g.neighbors(order[static_cast<std::size_t>(a)]);
    out.cliques.emplace_back(nb.begin(), nb.end());
    work += nb.size();
  }
  ops::add(work + ne);
  return out;
}

}  // namespace arx
