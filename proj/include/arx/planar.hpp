#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "arx/graph.hpp"
#include "arx/random.hpp"
#include "arx/verdict.hpp"

namespace arx {

// A connected planar graph given by a rotation system: rotation(v) lists the
// neighbours of v in clockwise order. Faces are traced with the rule
// next(a -> b) = (b -> successor of a around b).
class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;
  // Throws InvalidArgument unless the lists describe a simple undirected graph
  // (no loops, no repeats, u in rotation(v) iff v in rotation(u)).
  explicit EmbeddedGraph(std::vector<std::vector<Vertex>> rotation);

  Vertex order() const noexcept { return static_cast<Vertex>(rotation_.size()); }
  std::int64_t size() const noexcept { return graph_.size(); }
  const Graph& graph() const noexcept { return graph_; }
  const std::vector<Vertex>& rotation(Vertex v) const { return rotation_[v]; }
  const std::vector<std::vector<Vertex>>& rotations() const noexcept { return rotation_; }

  // Clockwise successor of u around v; u must be a neighbour of v.
  Vertex successor(Vertex v, Vertex u) const;

 private:
  std::vector<std::vector<Vertex>> rotation_;
  Graph graph_;
};

// Boundary walk v0 v1 ... v_{L-1}; its darts are v_i -> v_{i+1 mod L}.
using Face = std::vector<Vertex>;

// Every dart lies on exactly one face. Throws NotConnected on a disconnected
// graph and NotPlanarEmbedding when n - m + f != 2.
std::vector<Face> trace_faces(const EmbeddedGraph& e);

// K3 followed by `steps` stellations of uniformly chosen faces.
EmbeddedGraph apollonian(int steps, Seed seed);

// Maximal planar, n >= 3, and every facial triangle has a common neighbour.
// The witness of a failure is the offending face.
Verdict check_planar_retract(const EmbeddedGraph& e);
bool is_absolute_planar_retract(const EmbeddedGraph& e);

std::vector<Vertex> cut_vertices(const Graph& g);

// At each cut vertex u, a new vertex joined to u and to the first clockwise
// pair of neighbours of u lying in different components of G - u.
EmbeddedGraph biconnect(const EmbeddedGraph& e);

// Replaces every face of length >= 6 by a ring of triangles and quadrangles
// around a face two shorter, until all faces have length <= 5. Faces are
// handled first-in first-out. Throws NotBiconnected.
EmbeddedGraph shrink_faces(const EmbeddedGraph& e);

// One new vertex inside every face, adjacent to its whole boundary. Throws
// NotBiconnected when a face boundary repeats a vertex.
EmbeddedGraph stellate_all(const EmbeddedGraph& e);

struct StageSize {
  std::string name;
  Vertex order = 0;
  std::int64_t size = 0;
  std::int64_t faces = 0;
};

struct EmbeddingMap {
  std::vector<Vertex> image;  // input vertex -> output vertex
  std::vector<StageSize> stages;
};

struct PlanarEmbedding {
  EmbeddedGraph graph;
  EmbeddingMap map;
};

// biconnect, shrink_faces, then two rounds of stellate_all. Inputs with at
// most two vertices map onto K4.
PlanarEmbedding embed_into_retract(const EmbeddedGraph& e);

// Deletes each edge with probability 1 - keep unless that disconnects the
// graph; the rotation system is inherited.
EmbeddedGraph sparsify(const EmbeddedGraph& e, double keep, Seed seed);

// apollonian(n - 3) sparsified with `keep`; n >= 3.
EmbeddedGraph random_planar(Vertex n, double keep, Seed seed);

// Any rotation of a tree is planar; adjacency order is used.
EmbeddedGraph embed_tree(const Graph& tree);

namespace plane {
EmbeddedGraph cycle(Vertex n);
EmbeddedGraph k4();
EmbeddedGraph octahedron();
EmbeddedGraph grid(Vertex rows, Vertex cols);
}  // namespace plane

// Graph format, then one line "rot v: u1 ... ud" per vertex.
EmbeddedGraph read_embedded_graph(std::istream& in);
void write_embedded_graph(std::ostream& out, const EmbeddedGraph& e);

}  // namespace arx
