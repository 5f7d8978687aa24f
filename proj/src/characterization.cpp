#include <algorithm>
#include <cstdint>
#include <string>

#include "arx/bfs.hpp"
#include "arx/errors.hpp"
#include "arx/k_chromatic.hpp"

namespace arx {

namespace {

using Bits = std::vector<std::uint64_t>;

bool meets(const Bits& a, const Bits& b, const Bits& c) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w] & b[w] & c[w]) return true;
  return false;
}

// Bron-Kerbosch with pivoting; stops at the first maximal clique whose size
// differs from k and returns it.
class CliqueSizes {
 public:
  CliqueSizes(const Graph& g, int k) : g_(g), k_(k) {}

  std::vector<Vertex> find_bad() {
    std::vector<Vertex> p(static_cast<std::size_t>(g_.order()));
    for (Vertex v = 0; v < g_.order(); ++v) p[static_cast<std::size_t>(v)] = v;
    std::vector<Vertex> r, x;
    expand(r, p, x);
    return bad_;
  }

 private:
  bool expand(std::vector<Vertex>& r, std::vector<Vertex> p, std::vector<Vertex> x) {
    if (p.empty()) {
      if (x.empty() && static_cast<int>(r.size()) != k_) {
        bad_ = r;
        return true;
      }
      return false;
    }
    Vertex pivot = p.front();
    std::size_t best = 0;
    for (const auto* set : {&p, &x})
      for (Vertex u : *set) {
        std::size_t c = 0;
        for (Vertex v : p) c += g_.has_edge(u, v);
        if (c > best || (c == best && set == &p && u == p.front())) {
          best = c;
          pivot = u;
        }
      }
    std::vector<Vertex> todo;
    for (Vertex v : p)
      if (!g_.has_edge(pivot, v)) todo.push_back(v);
    for (Vertex v : todo) {
      std::vector<Vertex> np, nx;
      for (Vertex w : p)
        if (g_.has_edge(v, w)) np.push_back(w);
      for (Vertex w : x)
        if (g_.has_edge(v, w)) nx.push_back(w);
      r.push_back(v);
      if (expand(r, std::move(np), std::move(nx))) return true;
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<Vertex> bad_;
};

}  // namespace

Verdict check_characterization(const ColoredGraph& cg, const CharacterizationOptions& opts) {
  const Graph& g = cg.graph;
  const Vertex n = g.order();
  const int k = cg.k;

  if (auto bad = CliqueSizes(g, k).find_bad(); !bad.empty()) {
    std::sort(bad.begin(), bad.end());
    std::string detail = "maximal clique of size " + std::to_string(bad.size()) + " with k = " + std::to_string(k);
    return Verdict::fail(std::move(detail), std::move(bad));
  }

  auto d = all_pairs_distances(g);
  for (Vertex u = 0; u < n; ++u) {
    if (std::find(d[static_cast<std::size_t>(u)].begin(), d[static_cast<std::size_t>(u)].end(), kUnreached) !=
        d[static_cast<std::size_t>(u)].end())
      throw NotConnected({u});
  }
  // Coloured neighbour on a shortest path: for non-adjacent u != v, every
  // colour i != c(v) (with c(u) != i or d(u, v) >= 3) appears on N(v) one
  // step closer to u.
  std::vector<char> present(static_cast<std::size_t>(k) + 1);
  for (Vertex u = 0; u < n; ++u) {
    const auto& du = d[static_cast<std::size_t>(u)];
    for (Vertex v = 0; v < n; ++v) {
      int duv = du[static_cast<std::size_t>(v)];
      if (duv < 2) continue;
      std::fill(present.begin(), present.end(), 0);
      for (Vertex x : g.neighbors(v))
        if (du[static_cast<std::size_t>(x)] == duv - 1) present[static_cast<std::size_t>(cg.colour[x])] = 1;
      for (int i = 1; i <= k; ++i) {
        if (i == cg.colour[v] || (cg.colour[u] == i && duv < 3)) continue;
        if (!present[static_cast<std::size_t>(i)]) {
          return Verdict::fail("no colour-" + std::to_string(i) + " neighbour of " + std::to_string(v) +
                                   " on a shortest path from " + std::to_string(u),
                               {u, v}, {i});
        }
      }
    }
  }

  // Colour-restricted Helly property of balls.
  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  int diam = 0;
  for (const auto& row : d) diam = std::max(diam, *std::max_element(row.begin(), row.end()));
  // ball[v][r] for r in 0..diam.
  std::vector<std::vector<Bits>> ball(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    auto& bv = ball[static_cast<std::size_t>(v)];
    bv.assign(static_cast<std::size_t>(diam) + 1, Bits(words, 0));
    for (Vertex w = 0; w < n; ++w)
      for (int r = d[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]; r <= diam; ++r)
        bv[static_cast<std::size_t>(r)][static_cast<std::size_t>(w) / 64] |= std::uint64_t{1} << (w % 64);
  }
  std::vector<Bits> cls(static_cast<std::size_t>(k) + 1, Bits(words, 0));
  for (Vertex v = 0; v < n; ++v)
    cls[static_cast<std::size_t>(cg.colour[v])][static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);

  auto family_fails = [&](const std::vector<Vertex>& centers, const std::vector<int>& radii, int i) {
    const Bits& c = cls[static_cast<std::size_t>(i)];
    for (std::size_t a = 0; a < centers.size(); ++a)
      for (std::size_t b = a + 1; b < centers.size(); ++b)
        if (!meets(ball[static_cast<std::size_t>(centers[a])][static_cast<std::size_t>(radii[a])],
                   ball[static_cast<std::size_t>(centers[b])][static_cast<std::size_t>(radii[b])], c))
          return false;
    Bits all = c;
    for (std::size_t a = 0; a < centers.size(); ++a)
      for (std::size_t w = 0; w < words; ++w) all[w] &= ball[static_cast<std::size_t>(centers[a])][static_cast<std::size_t>(radii[a])][w];
    return std::all_of(all.begin(), all.end(), [](std::uint64_t x) { return x == 0; });
  };
  auto helly_failure = [&](std::vector<Vertex> centers, std::vector<int> radii, int i) {
    return Verdict::fail("balls pairwise meet in colour " + std::to_string(i) + " but have no common colour-" +
                             std::to_string(i) + " vertex",
                         std::move(centers), std::move(radii));
  };

  if (opts.exhaustive && n <= 8) {
    // Every radius vector; radius e(v) makes ball v the whole graph, which
    // stands for "not in the family".
    std::vector<int> ecc(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
      ecc[static_cast<std::size_t>(v)] =
          *std::max_element(d[static_cast<std::size_t>(v)].begin(), d[static_cast<std::size_t>(v)].end());
    for (int i = 1; i <= k; ++i) {
      const Bits& c = cls[static_cast<std::size_t>(i)];
      std::vector<Vertex> centers;
      std::vector<int> radii;
      std::vector<Bits> acc{c};
      bool found = false;
      // Depth-first over vertices; only families that still pairwise meet
      // are extended.
      auto rec = [&](auto&& self, Vertex v) -> void {
        if (found) return;
        if (v == n) {
          if (centers.size() >= 3 && std::all_of(acc.back().begin(), acc.back().end(), [](std::uint64_t x) { return x == 0; }))
            found = true;
          return;
        }
        self(self, v + 1);  // v absent
        for (int r = 0; r < ecc[static_cast<std::size_t>(v)] && !found; ++r) {
          const Bits& bv = ball[static_cast<std::size_t>(v)][static_cast<std::size_t>(r)];
          bool ok = meets(bv, c, c);
          for (std::size_t a = 0; a < centers.size() && ok; ++a)
            ok = meets(bv, ball[static_cast<std::size_t>(centers[a])][static_cast<std::size_t>(radii[a])], c);
          if (!ok) continue;
          Bits next = acc.back();
          for (std::size_t w = 0; w < words; ++w) next[w] &= bv[w];
          centers.push_back(v);
          radii.push_back(r);
          acc.push_back(std::move(next));
          self(self, v + 1);
          if (found) return;
          acc.pop_back();
          radii.pop_back();
          centers.pop_back();
        }
      };
      rec(rec, 0);
      if (found) return helly_failure(centers, radii, i);
    }
    return Verdict::pass();
  }

  Rng rng(opts.seed, "characterization");
  std::vector<Vertex> pool(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) pool[static_cast<std::size_t>(v)] = v;
  const int max_family = std::min<int>(n, 8);
  for (int trial = 0; trial < opts.budget && max_family >= 3; ++trial) {
    int size = static_cast<int>(rng.between(3, max_family));
    for (int a = 0; a < size; ++a) std::swap(pool[static_cast<std::size_t>(a)], pool[static_cast<std::size_t>(rng.between(a, n - 1))]);
    std::vector<Vertex> centers(pool.begin(), pool.begin() + size);
    std::vector<int> radii;
    for (int a = 0; a < size; ++a) {
      int r = 0;
      while (r < diam && rng.bernoulli(0.5)) ++r;
      radii.push_back(r);
    }
    for (int i = 1; i <= k; ++i)
      if (family_fails(centers, radii, i)) return helly_failure(centers, radii, i);
  }
  return Verdict::sampled();
}

}  // namespace arx
