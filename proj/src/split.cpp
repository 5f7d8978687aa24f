#include "arx/split.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "arx/errors.hpp"
#include "arx/instrument.hpp"

namespace arx {

namespace {

constexpr std::int64_t kCertificateEdgeLimit = 4000;

// Induced 2K2, C4 or C5; empty if none found.
std::vector<Vertex> forbidden_subgraph(const Graph& g) {
  auto edges = g.edges();
  auto adj = [&](Vertex a, Vertex b) { return g.has_edge(a, b); };
  // 2K2 and C4 from pairs of disjoint edges.
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [a, b] = edges[i];
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto [c, d] = edges[j];
      if (c == a || c == b || d == a || d == b) continue;
      int cross = adj(a, c) + adj(a, d) + adj(b, c) + adj(b, d);
      if (cross == 0) return {a, b, c, d};
      // C4 a-b-d-c-a or a-b-c-d-a with no chords.
      if (cross == 2 && adj(a, c) && adj(b, d) && !adj(a, d) && !adj(b, c)) return {a, b, d, c};
      if (cross == 2 && adj(a, d) && adj(b, c) && !adj(a, c) && !adj(b, d)) return {a, b, c, d};
    }
  }
  // Induced C5 a-b-c-d-e-a.
  for (auto [a, b] : edges) {
    for (Vertex c : g.neighbors(b)) {
      if (c == a || adj(a, c)) continue;
      for (Vertex d : g.neighbors(c)) {
        if (d == b || adj(d, a) || adj(d, b)) continue;
        for (Vertex e : g.neighbors(d)) {
          if (e == c || !adj(e, a) || adj(e, b) || adj(e, c)) continue;
          return {a, b, c, d, e};
        }
      }
    }
  }
  return {};
}

[[noreturn]] void not_split(const Graph& g) {
  std::vector<Vertex> w;
  if (g.size() <= kCertificateEdgeLimit) w = forbidden_subgraph(g);
  std::string what = w.size() == 5 ? "induced C5" : w.size() == 4 ? "induced 2K2 or C4" : "degree sequence test failed";
  throw NotSplit(what, std::move(w));
}

}  // namespace

int partition_case(const Graph& g, const std::vector<Vertex>& clique, const std::vector<Vertex>& stable) {
  const auto k = static_cast<Vertex>(clique.size());
  for (Vertex y : stable)
    if (g.degree(y) == k) return 2;
  for (Vertex x : clique)
    if (g.degree(x) == k - 1) return 3;
  return 1;
}

SplitPartition split_partition(const Graph& g) {
  const Vertex n = g.order();
  if (n == 0) throw InvalidArgument("empty graph");
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  Vertex m = 0;
  for (Vertex i = 0; i < n; ++i)
    if (g.degree(order[static_cast<std::size_t>(i)]) >= i) m = i + 1;
  std::int64_t head = 0, tail = 0;
  for (Vertex i = 0; i < n; ++i) (i < m ? head : tail) += g.degree(order[static_cast<std::size_t>(i)]);
  ops::add(static_cast<std::uint64_t>(n));
  if (head != static_cast<std::int64_t>(m) * (m - 1) + tail) not_split(g);

  SplitPartition p;
  p.clique.assign(order.begin(), order.begin() + m);
  p.stable.assign(order.begin() + m, order.end());
  // Normalize to a maximum stable set: a clique vertex without stable
  // neighbours moves over (at most one exists).
  const Vertex k = m;
  if (k > 1) {
    for (std::size_t i = 0; i < p.clique.size(); ++i) {
      Vertex x = p.clique[i];
      if (g.degree(x) == k - 1) {
        p.stable.push_back(x);
        p.clique.erase(p.clique.begin() + static_cast<std::ptrdiff_t>(i));
        break;
      }
    }
  }
  std::sort(p.clique.begin(), p.clique.end());
  std::sort(p.stable.begin(), p.stable.end());
  p.tag = partition_case(g, p.clique, p.stable);
  return p;
}

bool is_complete_split(const Graph& g, const SplitPartition& p) {
  const auto k = static_cast<Vertex>(p.clique.size());
  return std::all_of(p.stable.begin(), p.stable.end(), [&](Vertex y) { return g.degree(y) == k; });
}

bool recognize_absolute_split(const Graph& g) {
  auto p = split_partition(g);
  return p.unique() || is_complete_split(g, p);
}

PruneResult prune_to_retract(const Graph& g) {
  require_connected(g);
  auto p = split_partition(g);
  const Vertex n = g.order();
  PruneResult out;
  std::vector<Vertex> deg(static_cast<std::size_t>(n));
  std::vector<std::uint8_t> in_clique(static_cast<std::size_t>(n), 0);
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  for (Vertex v : p.clique) in_clique[static_cast<std::size_t>(v)] = 1;
  // Two arrays of degree-indexed doubly linked lists (clique side, stable side).
  std::vector<Vertex> head[2] = {std::vector<Vertex>(static_cast<std::size_t>(n), -1),
                                 std::vector<Vertex>(static_cast<std::size_t>(n), -1)};
  std::vector<Vertex> next(static_cast<std::size_t>(n), -1), prev(static_cast<std::size_t>(n), -1);
  auto link = [&](Vertex v) {
    auto& h = head[in_clique[static_cast<std::size_t>(v)]][static_cast<std::size_t>(deg[static_cast<std::size_t>(v)])];
    prev[static_cast<std::size_t>(v)] = -1;
    next[static_cast<std::size_t>(v)] = h;
    if (h >= 0) prev[static_cast<std::size_t>(h)] = v;
    h = v;
  };
  auto unlink = [&](Vertex v) {
    auto& h = head[in_clique[static_cast<std::size_t>(v)]][static_cast<std::size_t>(deg[static_cast<std::size_t>(v)])];
    Vertex a = prev[static_cast<std::size_t>(v)], b = next[static_cast<std::size_t>(v)];
    if (a >= 0) {
      next[static_cast<std::size_t>(a)] = b;
    } else {
      h = b;
    }
    if (b >= 0) prev[static_cast<std::size_t>(b)] = a;
  };
  for (Vertex v = n - 1; v >= 0; --v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    link(v);
  }
  std::uint64_t work = static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(g.size());
  Vertex k = static_cast<Vertex>(p.clique.size());
  Vertex left = n;
  while (left > 1) {
    Vertex v = -1;
    if (k >= 1 && head[1][static_cast<std::size_t>(k - 1)] >= 0) {
      v = head[1][static_cast<std::size_t>(k - 1)];
    } else if (k < n && head[0][static_cast<std::size_t>(k)] >= 0) {
      v = head[0][static_cast<std::size_t>(k)];
    } else {
      break;
    }
    unlink(v);
    alive[static_cast<std::size_t>(v)] = 0;
    out.removed.push_back(v);
    out.removed_from_clique.push_back(in_clique[static_cast<std::size_t>(v)]);
    if (in_clique[static_cast<std::size_t>(v)]) --k;
    --left;
    for (Vertex w : g.neighbors(v)) {
      if (!alive[static_cast<std::size_t>(w)]) continue;
      unlink(w);
      --deg[static_cast<std::size_t>(w)];
      link(w);
    }
    work += 1 + g.degree(v);
  }
  for (Vertex v = 0; v < n; ++v)
    if (alive[static_cast<std::size_t>(v)]) out.kept.push_back(v);
  out.graph = induced_subgraph(g, out.kept);
  out.work = work;
  ops::add(work);
  return out;
}

int split_diameter(const Graph& g) {
  const Vertex n = g.order();
  if (n == 0) throw InvalidArgument("empty graph");
  require_connected(g);
  if (n == 1) return 0;
  if (g.size() == static_cast<std::int64_t>(n) * (n - 1) / 2) return 1;
  auto p = split_partition(g);
  std::vector<Vertex> index(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < p.clique.size(); ++i) index[static_cast<std::size_t>(p.clique[i])] = static_cast<Vertex>(i);
  const std::size_t words = (p.clique.size() + 63) / 64;
  std::vector<std::uint64_t> bits(p.stable.size() * words, 0);
  for (std::size_t s = 0; s < p.stable.size(); ++s)
    for (Vertex x : g.neighbors(p.stable[s])) {
      auto i = static_cast<std::size_t>(index[static_cast<std::size_t>(x)]);
      bits[s * words + i / 64] |= std::uint64_t{1} << (i % 64);
    }
  std::uint64_t work = 0;
  for (std::size_t a = 0; a < p.stable.size(); ++a)
    for (std::size_t b = a + 1; b < p.stable.size(); ++b) {
      bool meet = false;
      for (std::size_t w = 0; w < words && !meet; ++w) meet = (bits[a * words + w] & bits[b * words + w]) != 0;
      work += words;
      if (!meet) {
        ops::add(work);
        return 3;
      }
    }
  ops::add(work);
  return 2;
}

}  // namespace arx
