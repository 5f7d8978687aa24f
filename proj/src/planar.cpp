#include "arx/planar.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "arx/errors.hpp"
#include "arx/io.hpp"

namespace arx {

namespace {

Graph graph_of(const std::vector<std::vector<Vertex>>& rot) {
  const auto n = static_cast<Vertex>(rot.size());
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : rot[v]) {
      if (u < 0 || u >= n) throw InvalidArgument("rotation of " + std::to_string(v) + " names vertex " + std::to_string(u));
      if (v < u) edges.emplace_back(v, u);
    }
  }
  Graph g = Graph::from_edges(n, edges);
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> sorted = rot[v];
    std::sort(sorted.begin(), sorted.end());
    auto nb = g.neighbors(v);
    if (!std::equal(sorted.begin(), sorted.end(), nb.begin(), nb.end())) {
      throw InvalidArgument("rotation of " + std::to_string(v) + " is not a permutation of its neighbours");
    }
  }
  return g;
}

// Mutable rotation system for the constructions.
struct Rotations {
  std::vector<std::vector<Vertex>> rot;

  Vertex add(std::vector<Vertex> nbrs) {
    rot.push_back(std::move(nbrs));
    return static_cast<Vertex>(rot.size() - 1);
  }
  void insert_after(Vertex v, Vertex after, Vertex w) {
    auto& r = rot[v];
    r.insert(std::find(r.begin(), r.end(), after) + 1, w);
  }
  void insert_before(Vertex v, Vertex before, Vertex w) {
    auto& r = rot[v];
    r.insert(std::find(r.begin(), r.end(), before), w);
  }
};

// New vertex inside face f, joined to every boundary vertex. The boundary
// must be a simple cycle.
Vertex stellate(Rotations& r, const Face& f) {
  const std::size_t len = f.size();
  Vertex z = r.add(std::vector<Vertex>(f.rbegin(), f.rend()));
  for (std::size_t i = 0; i < len; ++i) r.insert_after(f[i], f[(i + len - 1) % len], z);
  return z;
}

void require_simple_boundary(const Face& f) {
  std::vector<Vertex> s = f;
  std::sort(s.begin(), s.end());
  auto it = std::adjacent_find(s.begin(), s.end());
  if (it != s.end()) throw NotBiconnected(*it);
}

std::int64_t face_count(const EmbeddedGraph& e) { return 2 - e.order() + e.size(); }

}  // namespace

EmbeddedGraph::EmbeddedGraph(std::vector<std::vector<Vertex>> rotation)
    : rotation_(std::move(rotation)), graph_(graph_of(rotation_)) {}

Vertex EmbeddedGraph::successor(Vertex v, Vertex u) const {
  const auto& r = rotation_[v];
  auto it = std::find(r.begin(), r.end(), u);
  if (it == r.end()) throw InvalidArgument(std::to_string(u) + " is not a neighbour of " + std::to_string(v));
  return ++it == r.end() ? r.front() : *it;
}

std::vector<Face> trace_faces(const EmbeddedGraph& e) {
  const Graph& g = e.graph();
  require_connected(g);
  const Vertex n = e.order();
  if (n == 1) return {Face{0}};

  std::vector<std::size_t> off(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 0; v < n; ++v) off[v + 1] = off[v] + e.rotation(v).size();
  // (neighbour, position in rotation) sorted by neighbour, per vertex
  std::vector<std::pair<Vertex, std::size_t>> where(off[n]);
  for (Vertex v = 0; v < n; ++v) {
    const auto& r = e.rotation(v);
    for (std::size_t i = 0; i < r.size(); ++i) where[off[v] + i] = {r[i], i};
    std::sort(where.begin() + static_cast<std::ptrdiff_t>(off[v]), where.begin() + static_cast<std::ptrdiff_t>(off[v + 1]));
  }
  auto position = [&](Vertex v, Vertex u) {
    auto first = where.begin() + static_cast<std::ptrdiff_t>(off[v]);
    auto last = where.begin() + static_cast<std::ptrdiff_t>(off[v + 1]);
    return std::lower_bound(first, last, std::pair<Vertex, std::size_t>{u, 0})->second;
  };

  std::vector<char> used(off[n], 0);
  std::vector<Face> faces;
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < e.rotation(v).size(); ++i) {
      if (used[off[v] + i]) continue;
      Face f;
      Vertex a = v;
      std::size_t ai = i;
      while (!used[off[a] + ai]) {
        used[off[a] + ai] = 1;
        f.push_back(a);
        Vertex b = e.rotation(a)[ai];
        ai = (position(b, a) + 1) % e.rotation(b).size();
        a = b;
      }
      faces.push_back(std::move(f));
    }
  }
  std::int64_t euler = n - g.size() + static_cast<std::int64_t>(faces.size());
  if (euler != 2) {
    throw NotPlanarEmbedding("n - m + f = " + std::to_string(euler) + " (" + std::to_string(faces.size()) + " faces)");
  }
  return faces;
}

EmbeddedGraph apollonian(int steps, Seed seed) {
  if (steps < 0) throw InvalidArgument("apollonian: steps must be non-negative");
  Rng rng(seed, "apollonian");
  Rotations r{{{1, 2}, {2, 0}, {0, 1}}};
  std::vector<Face> faces{{0, 1, 2}, {0, 2, 1}};
  for (int s = 0; s < steps; ++s) {
    std::size_t i = rng.below(faces.size());
    Face f = faces[i];
    Vertex z = stellate(r, f);
    faces[i] = {f[0], f[1], z};
    faces.push_back({f[1], f[2], z});
    faces.push_back({f[2], f[0], z});
  }
  return EmbeddedGraph(std::move(r.rot));
}

Verdict check_planar_retract(const EmbeddedGraph& e) {
  if (e.order() < 3) return Verdict::fail("fewer than three vertices", {});
  const Graph& g = e.graph();
  for (const Face& f : trace_faces(e)) {
    if (f.size() != 3) return Verdict::fail("face of length " + std::to_string(f.size()) + " is not a triangle", f);
    Vertex a = f[0], b = f[1], c = f[2];
    if (g.degree(b) < g.degree(a)) std::swap(a, b);
    if (g.degree(c) < g.degree(a)) std::swap(a, c);
    bool extends = false;
    for (Vertex w : g.neighbors(a)) {
      if (w != b && w != c && g.has_edge(w, b) && g.has_edge(w, c)) {
        extends = true;
        break;
      }
    }
    if (!extends) return Verdict::fail("facial triangle lies in no K4", f);
  }
  return Verdict::pass();
}

bool is_absolute_planar_retract(const EmbeddedGraph& e) { return check_planar_retract(e).ok(); }

std::vector<Vertex> cut_vertices(const Graph& g) {
  const Vertex n = g.order();
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<char> cut(static_cast<std::size_t>(n), 0);
  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> stack;
  int time = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    int children = 0;
    disc[root] = low[root] = time++;
    stack.push_back({root, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        Vertex v = f.v, w = nb[f.next++];
        if (disc[w] == -1) {
          parent[w] = v;
          disc[w] = low[w] = time++;
          if (v == root) ++children;
          stack.push_back({w, 0});
        } else if (w != parent[v]) {
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      Vertex v = f.v;
      stack.pop_back();
      if (stack.empty()) break;
      Vertex p = stack.back().v;
      low[p] = std::min(low[p], low[v]);
      if (p != root && low[v] >= disc[p]) cut[p] = 1;
    }
    if (children > 1) cut[root] = 1;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (cut[v]) out.push_back(v);
  return out;
}

EmbeddedGraph biconnect(const EmbeddedGraph& e) {
  require_connected(e.graph());
  EmbeddedGraph cur = e;
  for (;;) {
    auto cuts = cut_vertices(cur.graph());
    if (cuts.empty()) return cur;
    const Vertex u = cuts.front();
    const Graph& g = cur.graph();

    std::vector<Vertex> label(static_cast<std::size_t>(g.order()), -1);
    std::vector<Vertex> queue;
    for (Vertex s : g.neighbors(u)) {
      if (label[s] != -1) continue;
      label[s] = s;
      queue.assign(1, s);
      for (std::size_t h = 0; h < queue.size(); ++h) {
        for (Vertex w : g.neighbors(queue[h])) {
          if (w != u && label[w] == -1) {
            label[w] = s;
            queue.push_back(w);
          }
        }
      }
    }

    Rotations r{cur.rotations()};
    const auto& around = cur.rotation(u);
    const std::size_t d = around.size();
    for (std::size_t i = 0; i < d; ++i) {
      Vertex x = around[i], y = around[(i + 1) % d];
      if (label[x] == label[y]) continue;
      Vertex z = r.add({u, x, y});
      r.insert_after(u, x, z);
      r.insert_before(x, u, z);
      r.insert_after(y, u, z);
      break;
    }
    cur = EmbeddedGraph(std::move(r.rot));
  }
}

EmbeddedGraph shrink_faces(const EmbeddedGraph& e) {
  auto cuts = cut_vertices(e.graph());
  if (!cuts.empty()) throw NotBiconnected(cuts.front());
  std::deque<Face> queue;
  std::int64_t perimeter = 0;
  for (Face& f : trace_faces(e)) {
    if (f.size() < 6) continue;
    perimeter += static_cast<std::int64_t>(f.size());
    queue.push_back(std::move(f));
  }
  if (queue.empty()) return e;

  Rotations r{e.rotations()};
  while (!queue.empty()) {
    Face c = std::move(queue.front());
    queue.pop_front();
    const std::size_t len = c.size();
    std::size_t start = 0;
    for (std::size_t i = 1; i < len; ++i) {
      if (std::pair(c[i], c[(i + 1) % len]) < std::pair(c[start], c[(start + 1) % len])) start = i;
    }
    std::rotate(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(start), c.end());

    // [c0, c1, c2] contracts to x; c3..c_{len-1} get copies on the inner ring.
    const Vertex x = static_cast<Vertex>(r.rot.size());
    auto copy = [&](std::size_t i) { return static_cast<Vertex>(x + static_cast<Vertex>(i) - 2); };
    r.add({c[1], c[0], copy(len - 1), copy(3), c[2]});
    for (std::size_t i = 3; i < len; ++i) {
      Vertex prev = i == 3 ? x : copy(i - 1);
      Vertex next = i == len - 1 ? x : copy(i + 1);
      r.add({c[i], prev, next});
    }
    r.insert_after(c[0], c[len - 1], x);
    r.insert_after(c[1], c[0], x);
    r.insert_after(c[2], c[1], x);
    for (std::size_t i = 3; i < len; ++i) r.insert_after(c[i], c[i - 1], copy(i));

    Face inner{x};
    for (std::size_t i = 3; i < len; ++i) inner.push_back(copy(i));
    std::int64_t next_perimeter = perimeter - static_cast<std::int64_t>(len);
    if (inner.size() >= 6) {
      next_perimeter += static_cast<std::int64_t>(inner.size());
      queue.push_back(std::move(inner));
    }
    if (next_perimeter >= perimeter) throw std::logic_error("shrink_faces: long-face perimeter did not decrease");
    perimeter = next_perimeter;
  }
  EmbeddedGraph out(std::move(r.rot));
  trace_faces(out);
  return out;
}

EmbeddedGraph stellate_all(const EmbeddedGraph& e) {
  auto faces = trace_faces(e);
  Rotations r{e.rotations()};
  for (const Face& f : faces) {
    require_simple_boundary(f);
    stellate(r, f);
  }
  return EmbeddedGraph(std::move(r.rot));
}

PlanarEmbedding embed_into_retract(const EmbeddedGraph& e) {
  require_connected(e.graph());
  PlanarEmbedding out;
  auto record = [&](const char* name, const EmbeddedGraph& h) {
    out.map.stages.push_back({name, h.order(), h.size(), face_count(h)});
  };
  out.map.image.resize(static_cast<std::size_t>(e.order()));
  std::iota(out.map.image.begin(), out.map.image.end(), 0);
  if (e.order() <= 2) {
    out.graph = plane::k4();
    record("K4", out.graph);
    return out;
  }
  EmbeddedGraph h = biconnect(e);
  record("H1", h);
  h = shrink_faces(h);
  record("H2", h);
  h = stellate_all(h);
  record("H3", h);
  h = stellate_all(h);
  record("H4", h);
  out.graph = std::move(h);
  return out;
}

EmbeddedGraph sparsify(const EmbeddedGraph& e, double keep, Seed seed) {
  require_connected(e.graph());
  Rng rng(seed, "sparsify");
  Rotations r{e.rotations()};
  const auto n = static_cast<std::size_t>(e.order());
  std::vector<int> seen(n, -1);
  int stamp = 0;
  std::vector<Vertex> queue;
  auto reachable = [&](Vertex s, Vertex t) {
    ++stamp;
    seen[s] = stamp;
    queue.assign(1, s);
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (Vertex w : r.rot[queue[h]]) {
        if (seen[w] == stamp) continue;
        if (w == t) return true;
        seen[w] = stamp;
        queue.push_back(w);
      }
    }
    return false;
  };
  for (auto [u, v] : e.graph().edges()) {
    if (rng.bernoulli(keep)) continue;
    auto& ru = r.rot[u];
    auto& rv = r.rot[v];
    auto iu = std::find(ru.begin(), ru.end(), v) - ru.begin();
    auto iv = std::find(rv.begin(), rv.end(), u) - rv.begin();
    ru.erase(ru.begin() + iu);
    rv.erase(rv.begin() + iv);
    if (!reachable(u, v)) {
      ru.insert(ru.begin() + iu, v);
      rv.insert(rv.begin() + iv, u);
    }
  }
  return EmbeddedGraph(std::move(r.rot));
}

EmbeddedGraph random_planar(Vertex n, double keep, Seed seed) {
  if (n < 3) throw InvalidArgument("random_planar needs n >= 3");
  return sparsify(apollonian(n - 3, seed), keep, mix64(seed));
}

EmbeddedGraph embed_tree(const Graph& tree) {
  require_connected(tree);
  if (tree.size() != tree.order() - 1) throw InvalidArgument("embed_tree: input is not a tree");
  std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(tree.order()));
  for (Vertex v = 0; v < tree.order(); ++v) rot[v].assign(tree.neighbors(v).begin(), tree.neighbors(v).end());
  return EmbeddedGraph(std::move(rot));
}

namespace plane {

EmbeddedGraph cycle(Vertex n) {
  if (n < 3) throw InvalidArgument("plane::cycle needs n >= 3");
  std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) rot[v] = {(v + n - 1) % n, (v + 1) % n};
  return EmbeddedGraph(std::move(rot));
}

EmbeddedGraph k4() { return apollonian(1, 0); }

EmbeddedGraph octahedron() {
  // 0 and 5 are the poles, 1..4 the equator.
  std::vector<std::vector<Vertex>> rot(6);
  rot[0] = {1, 4, 3, 2};
  rot[5] = {1, 2, 3, 4};
  for (Vertex i = 1; i <= 4; ++i) rot[i] = {0, i % 4 + 1, 5, (i + 2) % 4 + 1};
  return EmbeddedGraph(std::move(rot));
}

EmbeddedGraph grid(Vertex rows, Vertex cols) {
  if (rows < 1 || cols < 1) throw InvalidArgument("plane::grid needs positive dimensions");
  std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
  for (Vertex i = 0; i < rows; ++i) {
    for (Vertex j = 0; j < cols; ++j) {
      auto& r = rot[static_cast<std::size_t>(i * cols + j)];
      if (j > 0) r.push_back(i * cols + j - 1);
      if (i + 1 < rows) r.push_back((i + 1) * cols + j);
      if (j + 1 < cols) r.push_back(i * cols + j + 1);
      if (i > 0) r.push_back((i - 1) * cols + j);
    }
  }
  return EmbeddedGraph(std::move(rot));
}

}  // namespace plane

EmbeddedGraph read_embedded_graph(std::istream& in) {
  TokenReader tr(in);
  Graph g = read_graph_body(tr);
  const Vertex n = g.order();
  std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(n));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex k = 0; k < n; ++k) {
    if (tr.word("'rot'") != "rot") throw ParseError("line " + std::to_string(tr.line()) + ": expected 'rot'");
    std::string tok = tr.word("vertex label");
    long long v = -1;
    if (tok.size() >= 2 && tok.back() == ':') {
      try {
        std::size_t used = 0;
        v = std::stoll(tok.substr(0, tok.size() - 1), &used);
        if (used != tok.size() - 1) v = -1;
      } catch (const std::exception&) {
        v = -1;
      }
    }
    if (v < 0 || v >= n) throw ParseError("line " + std::to_string(tr.line()) + ": bad rotation label '" + tok + "'");
    if (seen[v]) throw ParseError("line " + std::to_string(tr.line()) + ": second rotation for vertex " + tok);
    seen[v] = 1;
    for (Vertex i = 0; i < g.degree(static_cast<Vertex>(v)); ++i) {
      rot[v].push_back(static_cast<Vertex>(tr.integer("rotation entry")));
    }
  }
  if (!tr.at_end()) throw ParseError("line " + std::to_string(tr.line()) + ": trailing content");
  try {
    EmbeddedGraph e(std::move(rot));
    if (!(e.graph() == g)) throw ParseError("rotation system does not match the edge list");
    require_connected(g);
    return e;
  } catch (const InvalidArgument& err) {
    throw ParseError(err.what());
  }
}

void write_embedded_graph(std::ostream& out, const EmbeddedGraph& e) {
  write_graph(out, e.graph());
  for (Vertex v = 0; v < e.order(); ++v) {
    out << "rot " << v << ':';
    for (Vertex u : e.rotation(v)) out << ' ' << u;
    out << '\n';
  }
}

}  // namespace arx
