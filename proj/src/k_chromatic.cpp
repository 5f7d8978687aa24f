#include "arx/k_chromatic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "arx/bfs.hpp"
#include "arx/errors.hpp"
#include "arx/instrument.hpp"
#include "arx/refinement.hpp"

namespace arx {

namespace {

// Least colour in 1..k absent from the coloured neighbours of v, skipping
// `avoid`; k + 1 when there is none.
int least_free(const Graph& g, Vertex v, const std::vector<int>& colour, int k, int avoid,
               std::vector<unsigned>& mark, unsigned& gen) {
  ++gen;
  for (Vertex w : g.neighbors(v))
    if (colour[w] > 0) mark[static_cast<std::size_t>(colour[w])] = gen;
  for (int i = 1; i <= k; ++i)
    if (i != avoid && mark[static_cast<std::size_t>(i)] != gen) return i;
  return k + 1;
}

}  // namespace

ColoredGraph color_absolute_retract(const Graph& g) {
  require_connected(g);
  const Vertex n = g.order();
  const Vertex u = 0;
  std::vector<int> colour(static_cast<std::size_t>(n), 0);
  std::vector<int> in_k(static_cast<std::size_t>(n), 0);  // |N(x) ∩ K|

  // Greedy maximal clique through u, smallest admissible neighbour first.
  std::vector<Vertex> clique{u};
  auto add_to_clique = [&](Vertex w) {
    colour[w] = static_cast<int>(clique.size());
    for (Vertex x : g.neighbors(w)) ++in_k[x];
  };
  add_to_clique(u);
  for (Vertex v : g.neighbors(u)) {
    if (in_k[v] == static_cast<int>(clique.size())) {
      clique.push_back(v);
      add_to_clique(v);
    }
  }
  const int k = static_cast<int>(clique.size());
  std::vector<unsigned> mark(static_cast<std::size_t>(k) + 2, 0);
  unsigned gen = 0;
  auto overflow = [&](Vertex v, const char* stage) {
    throw NotRetract(std::string("vertex ") + std::to_string(v) + " needs colour " + std::to_string(k + 1) +
                         " (" + stage + ")",
                     {v});
  };

  // Neighbours of u outside K, by non-increasing number of neighbours in K.
  std::vector<std::vector<Vertex>> by_count(static_cast<std::size_t>(k) + 1);
  for (Vertex v : g.neighbors(u))
    if (colour[v] == 0) by_count[static_cast<std::size_t>(in_k[v])].push_back(v);
  for (int c = k; c >= 0; --c) {
    for (Vertex v : by_count[static_cast<std::size_t>(c)]) {
      int i = least_free(g, v, colour, k, 0, mark, gen);
      if (i > k) overflow(v, "neighbour of the start vertex");
      colour[v] = i;
    }
  }

  auto dist = bfs(g, {u});
  int depth = *std::max_element(dist.begin(), dist.end());
  std::vector<std::vector<Vertex>> layer(static_cast<std::size_t>(depth) + 1);
  for (Vertex v = 0; v < n; ++v) layer[static_cast<std::size_t>(dist[v])].push_back(v);
  if (depth >= 2) {
    for (Vertex v : layer[2]) {
      int i = least_free(g, v, colour, k, colour[u], mark, gen);
      if (i > k) i = least_free(g, v, colour, k, 0, mark, gen);
      if (i > k) overflow(v, "distance two");
      colour[v] = i;
    }
  }
  for (int d = 3; d <= depth; ++d) {
    for (Vertex v : layer[static_cast<std::size_t>(d)]) {
      int i = least_free(g, v, colour, k, 0, mark, gen);
      if (i > k) overflow(v, "outer layers");
      colour[v] = i;
    }
  }
  ops::add(static_cast<std::uint64_t>(n) + 3 * static_cast<std::uint64_t>(g.size()));
  return ColoredGraph::make(g, std::move(colour));
}

bool diam_le_two(const ColoredGraph& cg) {
  const Graph& g = cg.graph;
  for (int i = 1; i <= cg.k; ++i) {
    Vertex best = cg.cls(i).front();
    for (Vertex v : cg.cls(i))
      if (g.degree(v) > g.degree(best)) best = v;
    if (g.degree(best) != g.order() - static_cast<Vertex>(cg.cls(i).size())) return false;
  }
  return true;
}

std::vector<ColourTriple> triple_split(const ColoredGraph& cg) {
  if (cg.k < 3) throw InvalidArgument("triple_split needs at least three colours");
  std::vector<int> seq;
  for (int i = 1; i <= cg.k; ++i) seq.push_back(i);
  for (int pad = 1; seq.size() % 3 != 0; ++pad) seq.push_back(pad);
  std::vector<ColourTriple> out;
  for (std::size_t s = 0; s < seq.size(); s += 3) {
    ColourTriple t;
    t.colours = {seq[s], seq[s + 1], seq[s + 2]};
    std::vector<int> local_colour(static_cast<std::size_t>(cg.k) + 1, 0);
    for (int j = 0; j < 3; ++j) local_colour[static_cast<std::size_t>(t.colours[static_cast<std::size_t>(j)])] = j + 1;
    std::vector<int> colours;
    for (Vertex v = 0; v < cg.graph.order(); ++v) {
      int c = local_colour[static_cast<std::size_t>(cg.colour[v])];
      if (c > 0) {
        t.back.push_back(v);
        colours.push_back(c);
      }
    }
    t.graph = ColoredGraph::make(induced_subgraph(cg.graph, t.back), std::move(colours));
    out.push_back(std::move(t));
  }
  return out;
}

namespace {

// Per-round state of the colour refinement: witness sets B[A, r] for the
// three roles r (0 = the target colour, 1 and 2 = the others in order).
struct RoleSets {
  std::array<SetList, 3> b;
};

class ColourRefinement {
 public:
  ColourRefinement(const ColoredGraph& cg, int i) : cg_(cg), role_(static_cast<std::size_t>(cg.graph.order())) {
    int r = 1;
    for (int c = 1; c <= 3; ++c) {
      if (c == i) {
        colour_of_role_[0] = c;
      } else {
        colour_of_role_[static_cast<std::size_t>(r++)] = c;
      }
    }
    for (Vertex v = 0; v < cg.graph.order(); ++v) {
      int c = cg.colour[v];
      role_[static_cast<std::size_t>(v)] = c == colour_of_role_[0] ? 0 : c == colour_of_role_[1] ? 1 : 2;
    }
    count_.assign(static_cast<std::size_t>(cg.graph.order()), 0);
    stamp_.assign(static_cast<std::size_t>(cg.graph.order()), 0);
  }

  std::vector<Vertex> run(int d) {
    const Graph& g = cg_.graph;
    const auto& v1 = cg_.cls(colour_of_role_[0]);
    // Base round: singleton groups merged along shared role-1 neighbours.
    SetList single, w;
    for (Vertex a : v1) {
      for (Vertex x : g.neighbors(a))
        if (role_[static_cast<std::size_t>(x)] == 1) w.items.push_back(x);
      w.close();
      single.items.push_back(a);
      single.close();
    }
    RoleSets cur;
    std::vector<int> group_of;
    GroupMerger merger(g.order());
    check(merger.run(w, cur.b[1], group_of), 1, 1);
    const int groups = static_cast<int>(cur.b[1].count());
    auto members = members_of(group_of, groups);
    // B[A, 0] is A itself for singletons, empty otherwise.
    for (int a = 0; a < groups; ++a) {
      const auto& m = members[static_cast<std::size_t>(a)];
      if (m.size() == 1) cur.b[0].items.push_back(v1[static_cast<std::size_t>(m[0])]);
      cur.b[0].close();
    }
    SetList n3;
    for (Vertex a : v1) {
      for (Vertex x : g.neighbors(a))
        if (role_[static_cast<std::size_t>(x)] == 2) n3.items.push_back(x);
      n3.close();
    }
    intersect(n3, members, cur.b[2]);
    require_disjoint(cur.b[2], 2, 1, true);

    for (int t = 1; t < d; ++t) {
      std::array<SetList, 3> wit;
      neighbours_in(cur.b[1], 0, wit[0]);
      neighbours_in(cur.b[2], 1, wit[1]);
      neighbours_in(cur.b[1], 2, wit[2]);
      RoleSets next;
      check(merger.run(wit[0], next.b[0], group_of), 0, t + 1);
      auto mem = members_of(group_of, static_cast<int>(next.b[0].count()));
      intersect(wit[1], mem, next.b[1]);
      intersect(wit[2], mem, next.b[2]);
      for (int r = 0; r < 3; ++r) require_disjoint(next.b[static_cast<std::size_t>(r)], r, t + 1, true);
      cur = std::move(next);
    }
    if (cur.b[0].count() != 1) return {};
    auto s = cur.b[0][0];
    std::vector<Vertex> out(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void check(const GroupMerger::Failure& f, int role, int step) const {
    if (f.kind == GroupMerger::Failure::kNone) return;
    std::string what = f.kind == GroupMerger::Failure::kEmptyWitness ? "empty" : "overlapping";
    throw NotRetract(what + " colour-" + std::to_string(colour_of_role_[static_cast<std::size_t>(role)]) +
                         " witness set at round " + std::to_string(step),
                     f.vertex >= 0 ? std::vector<Vertex>{f.vertex} : std::vector<Vertex>{}, step);
  }

  static std::vector<std::vector<int>> members_of(const std::vector<int>& group_of, int groups) {
    std::vector<std::vector<int>> m(static_cast<std::size_t>(groups));
    for (std::size_t a = 0; a < group_of.size(); ++a) m[static_cast<std::size_t>(group_of[a])].push_back(static_cast<int>(a));
    return m;
  }

  // out[A'] = intersection of w[A] over the old groups A merged into A'.
  void intersect(const SetList& w, const std::vector<std::vector<int>>& members, SetList& out) {
    out.clear();
    std::uint64_t work = 0;
    for (const auto& m : members) {
      ++gen_;
      for (int a : m) {
        for (Vertex x : w[static_cast<std::size_t>(a)]) {
          auto xi = static_cast<std::size_t>(x);
          if (stamp_[xi] != gen_) {
            stamp_[xi] = gen_;
            count_[xi] = 0;
          }
          if (++count_[xi] == static_cast<int>(m.size())) out.items.push_back(x);
        }
        work += w[static_cast<std::size_t>(a)].size();
      }
      out.close();
    }
    ops::add(work + members.size());
  }

  // w[A] = N(b[A]) restricted to a role.
  void neighbours_in(const SetList& b, int role, SetList& w) {
    w.clear();
    const Graph& g = cg_.graph;
    std::uint64_t work = 0;
    for (std::size_t a = 0; a < b.count(); ++a) {
      ++gen_;
      for (Vertex y : b[a]) {
        for (Vertex x : g.neighbors(y)) {
          auto xi = static_cast<std::size_t>(x);
          if (role_[xi] == role && stamp_[xi] != gen_) {
            stamp_[xi] = gen_;
            w.items.push_back(x);
          }
        }
        work += g.degree(y);
      }
      w.close();
    }
    ops::add(work + b.count());
  }

  void require_disjoint(const SetList& b, int role, int step, bool nonempty) {
    ++gen_;
    const unsigned owner_gen = gen_;
    for (std::size_t a = 0; a < b.count(); ++a) {
      if (nonempty && b[a].empty()) {
        throw NotRetract("empty colour-" + std::to_string(colour_of_role_[static_cast<std::size_t>(role)]) +
                             " witness set at round " + std::to_string(step),
                         {}, step);
      }
      for (Vertex x : b[a]) {
        auto xi = static_cast<std::size_t>(x);
        if (stamp_[xi] == owner_gen) {
          throw NotRetract("overlapping colour-" + std::to_string(colour_of_role_[static_cast<std::size_t>(role)]) +
                               " witness sets at round " + std::to_string(step),
                           {x}, step);
        }
        stamp_[xi] = owner_gen;
      }
    }
  }

  const ColoredGraph& cg_;
  std::array<int, 3> colour_of_role_{};
  std::vector<std::uint8_t> role_;
  std::vector<int> count_;
  std::vector<unsigned> stamp_;
  unsigned gen_ = 0;
};

int colour_ecc(const ColoredGraph& cg, int i, Vertex v) {
  auto d = bfs(cg.graph, {v});
  int e = 0;
  for (Vertex w : cg.cls(i)) e = std::max(e, d[w]);
  return e;
}

}  // namespace

std::vector<Vertex> colour_ecc_at_most(const ColoredGraph& cg3, int i, int D) {
  if (cg3.k != 3) throw InvalidArgument("colour_ecc_at_most needs a 3-coloured graph");
  if (i < 1 || i > 3) throw InvalidArgument("colour out of range");
  if (D < 2) throw InvalidArgument("colour_ecc_at_most needs D >= 2");
  const auto& vi = cg3.cls(i);
  if (vi.size() == 1) return vi;
  return ColourRefinement(cg3, i).run(D);
}

ColourDiameter di_and_peripherals(const ColoredGraph& cg3, int i, Seed seed, const KChromaticOptions& opts) {
  const auto& vi = cg3.cls(i);
  ColourDiameter out;
  if (vi.size() == 1) {
    out.peripherals = vi;
    return out;
  }
  const int approx = colour_ecc(cg3, i, vi.front());
  out.approximation = approx;
  const double threshold = opts.threshold_scale * 16.0 * std::sqrt(static_cast<double>(cg3.graph.order())) + 10.0;
  bool exact = opts.force_exact || (!opts.force_sampling && approx <= threshold);
  if (exact) {
    // d_i lies in [approx, 2 approx] and is at least 2.
    int lo = std::max(2, approx), hi = std::max(lo, 2 * approx);
    if (colour_ecc_at_most(cg3, i, hi).size() != vi.size()) {
      throw NotRetract("colour-" + std::to_string(i) + " eccentricities exceed twice the estimate", {vi.front()});
    }
    while (lo < hi) {
      int mid = lo + (hi - lo) / 2;
      if (colour_ecc_at_most(cg3, i, mid).size() == vi.size()) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    out.diameter = lo;
    if (lo == 2) {
      out.peripherals = vi;
    } else {
      auto inner = colour_ecc_at_most(cg3, i, lo - 1);
      std::set_difference(vi.begin(), vi.end(), inner.begin(), inner.end(), std::back_inserter(out.peripherals));
    }
    return out;
  }
  out.sampled = true;
  const int window = std::max(1, (approx - 5) / 8);
  auto est = peripherals_by_sampling_colour(cg3, i, window, seed, opts.sampling);
  out.diameter = est.diameter;
  out.peripherals = std::move(est.peripherals);
  return out;
}

int combine_colour_diameters(const ColoredGraph& cg, const std::vector<ColourDiameter>& per_colour) {
  int dmax = 0;
  for (const auto& c : per_colour) dmax = std::max(dmax, c.diameter);
  if (dmax <= 2) return 3;
  const Graph& g = cg.graph;
  std::vector<std::vector<char>> peripheral(static_cast<std::size_t>(cg.k) + 1);
  for (int j = 1; j <= cg.k; ++j) {
    if (per_colour[static_cast<std::size_t>(j - 1)].diameter != dmax) continue;
    peripheral[static_cast<std::size_t>(j)].assign(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : per_colour[static_cast<std::size_t>(j - 1)].peripherals) peripheral[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)] = 1;
  }
  std::vector<int> seen(static_cast<std::size_t>(cg.k) + 1), all_peripheral(static_cast<std::size_t>(cg.k) + 1);
  for (int i = 1; i <= cg.k; ++i) {
    if (peripheral[static_cast<std::size_t>(i)].empty()) continue;
    for (Vertex v : per_colour[static_cast<std::size_t>(i - 1)].peripherals) {
      std::fill(seen.begin(), seen.end(), 0);
      std::fill(all_peripheral.begin(), all_peripheral.end(), 1);
      for (Vertex x : g.neighbors(v)) {
        int j = cg.colour[x];
        seen[static_cast<std::size_t>(j)] = 1;
        if (peripheral[static_cast<std::size_t>(j)].empty() || !peripheral[static_cast<std::size_t>(j)][static_cast<std::size_t>(x)])
          all_peripheral[static_cast<std::size_t>(j)] = 0;
      }
      for (int j = 1; j <= cg.k; ++j) {
        if (j != i && seen[static_cast<std::size_t>(j)] && all_peripheral[static_cast<std::size_t>(j)]) return dmax + 1;
      }
      ops::add(g.degree(v) + static_cast<std::uint64_t>(cg.k));
    }
  }
  return dmax;
}

KChromaticResult diameter_k_chromatic_detail(const Graph& g, Seed seed, const KChromaticOptions& opts) {
  KChromaticResult out;
  require_connected(g);
  out.coloured = color_absolute_retract(g);
  const auto& cg = out.coloured;
  if (g.order() == 1) return out;
  if (cg.k < 3) {
    throw NotRetract("greedy clique has " + std::to_string(cg.k) + " vertices; the pipeline needs k >= 3", {0});
  }
  if (diam_le_two(cg)) {
    out.small = true;
    const std::int64_t n = g.order();
    out.diameter = g.size() == n * (n - 1) / 2 ? 1 : 2;
    return out;
  }
  out.per_colour.assign(static_cast<std::size_t>(cg.k), {});
  std::vector<char> done(static_cast<std::size_t>(cg.k) + 1, 0);
  for (const auto& t : triple_split(cg)) {
    for (int j = 0; j < 3; ++j) {
      int c = t.colours[static_cast<std::size_t>(j)];
      if (done[static_cast<std::size_t>(c)]) continue;
      done[static_cast<std::size_t>(c)] = 1;
      auto r = di_and_peripherals(t.graph, j + 1, mix64(seed + static_cast<Seed>(c)), opts);
      for (Vertex& v : r.peripherals) v = t.back[static_cast<std::size_t>(v)];
      std::sort(r.peripherals.begin(), r.peripherals.end());
      out.per_colour[static_cast<std::size_t>(c - 1)] = std::move(r);
    }
  }
  out.diameter = combine_colour_diameters(cg, out.per_colour);
  return out;
}

int diameter_k_chromatic(const Graph& g, Seed seed, const KChromaticOptions& opts) {
  return diameter_k_chromatic_detail(g, seed, opts).diameter;
}

}  // namespace arx
