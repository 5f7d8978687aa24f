#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "arx/bipartite_diameter.hpp"
#include "arx/halfsquare.hpp"
#include "arx/refinement.hpp"

namespace arx {

// Clique tree of a half-square H_side: the nodes are the maximal cliques of
// H_side and the cliques containing any vertex form a subtree. Node 0 is the
// root and parent[i] < i for the others (breadth-first numbering).
struct CliqueTree {
  int side = 0;
  std::vector<std::vector<Vertex>> cliques;  // base-graph ids, sorted
  std::vector<int> parent;

  std::vector<std::pair<int, int>> edges() const;
  // w(T): sum of clique sizes.
  std::int64_t weight() const;
};

// Builds the clique tree from the hypergraph (V_side, {N(u) : u on the other
// side}) via maximum cardinality search on hyperedges, dropping hyperedges
// contained in others. Throws NotDualHypertree when that hypergraph has no
// join tree (the base graph is then not chordal bipartite).
CliqueTree clique_tree(const HalfSquareView& view);

// One clique per line "id: v1 v2 ...", then one tree edge per line "id id".
void write_clique_tree(std::ostream& out, const CliqueTree& t);

struct GateTable {
  // dist[v] = d_H(v, C) for v on the side, kUnreached elsewhere.
  std::vector<int> dist;
  // gate[v]: a vertex at distance dist[v] - 1 from v adjacent to every
  // vertex of C at distance dist[v]; -1 for v in C and off-side vertices.
  std::vector<Vertex> gate;
};

// Distances to the clique C and gates of H_side. Throws InvalidArgument if C
// is not a clique of H_side.
GateTable gates(const CliqueTree& t, const HalfSquareView& view, std::span<const Vertex> clique);

// A central vertex of H_side (double sweep, then a slice clique whose member
// dominates the gates of the farthest vertices). Throws NoCentralVertexFound
// when no candidate passes, which certifies H_side is not strongly chordal.
Vertex central_vertex(const CliqueTree& t, const HalfSquareView& view);

// C(H_side), sorted.
std::vector<Vertex> center_set(const CliqueTree& t, const HalfSquareView& view);

struct ChordalEccentricities {
  std::vector<int> ecc;  // e_G(v)
  std::array<CliqueTree, 2> trees;
  HalfDiamData halves;   // per-side e_H, radius, center, diameter, peripherals
  int anomalies = 0;     // vertices with e_{H_i}(v) < rad(H_{1-i}) - 1
};

// All eccentricities of a connected chordal bipartite graph in linear time.
ChordalEccentricities all_eccentricities_detail(const Graph& g);
std::vector<int> all_eccentricities_chordal_bipartite(const Graph& g);

namespace detail {

// Local working form of a half-square given by its clique tree: H-vertices
// are 0..ns-1 (in increasing base-graph id), cliques 0..nc-1. The incidence
// graph has the H-vertices as nodes 0..ns-1 and clique c as node ns + c.
class CliqueStructure {
 public:
  CliqueStructure(const HalfSquareView& view, const CliqueTree& t);

  Vertex ns = 0;
  int nc = 0;
  std::vector<Vertex> global;  // local -> base id
  std::vector<Vertex> local;   // base id -> local, -1 off side
  SetList members;             // clique -> local vertices
  SetList containing;          // local vertex -> cliques
  std::vector<int> parent;
  std::vector<int> top;        // shallowest clique containing each vertex
  Graph incidence;
  std::vector<std::uint8_t> incidence_side;

  // d_H from a set of local vertices.
  std::vector<int> distances(std::span<const Vertex> sources) const;

  // count[y] = |N[y] ∩ X| for every local y, X given by a membership mask.
  std::vector<int> closed_neighbours_in(const std::vector<char>& in_x) const;

  struct Gates {
    std::vector<int> level;   // d_H(v, X)
    std::vector<Vertex> gate; // -1 inside X
  };
  // Gates with respect to a gated set X (a clique or a closed neighbourhood).
  Gates gates(std::span<const Vertex> x) const;

  // For every vertex v with d(v, c) >= r - 1 (r = e_H(c) >= 3): the gate of v
  // w.r.t. N[c] when d(v, c) = r, and the vertex v' when d(v, c) = r - 1.
  std::vector<Vertex> far_witnesses(Vertex c, int r, const std::vector<int>& dist_c) const;

  Vertex central_vertex() const;
};

}  // namespace detail

}  // namespace arx
