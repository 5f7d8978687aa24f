#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "arx/bfs.hpp"
#include "arx/bipartition.hpp"
#include "arx/errors.hpp"
#include "arx/graph.hpp"

namespace arx {

// k has the wrong parity for the sides of the targets and candidates.
class ParityError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// The half-square H_side of a connected bipartite graph: vertex set V_side,
// u ~ v when they share a neighbour. Never materialized; distances come from
// BFS in the base graph (d_H = d_G / 2). The base graph must outlive the view.
class HalfSquareView {
 public:
  HalfSquareView(const Graph& base, int side);
  HalfSquareView(const Graph& base, std::shared_ptr<const Bipartition> parts, int side);

  const Graph& base() const noexcept { return *base_; }
  const Bipartition& parts() const noexcept { return *parts_; }
  std::shared_ptr<const Bipartition> shared_parts() const noexcept { return parts_; }
  int side() const noexcept { return side_; }
  std::span<const Vertex> vertices() const noexcept { return parts_->part[side_]; }
  bool on_side(Vertex v) const noexcept { return base_->contains(v) && parts_->side[v] == side_; }
  HalfSquareView opposite() const { return HalfSquareView(*base_, parts_, 1 - side_); }

 private:
  const Graph* base_;
  std::shared_ptr<const Bipartition> parts_;
  int side_;
};

// d_H(source, v) for v in V_side; kUnreached on the other side.
Distances half_bfs(const HalfSquareView& view, Vertex source);

// { v in V_candidate_side : d_G(v, t) <= k for every target t }, sorted.
// Targets must lie on one side; k must be even when targets and candidates
// share a side and odd otherwise (ParityError). Computed by partition
// refinement over k rounds, O(k m). On a graph that is not an absolute
// retract of bipartite graphs this may throw NotRetract (step = round).
std::vector<Vertex> within_k_of_all(const HalfSquareView& view, std::span<const Vertex> targets,
                                    int k, int candidate_side);

// Same on a bipartite graph given by its side labels.
std::vector<Vertex> within_k_of_all(const Graph& g, const std::vector<std::uint8_t>& side,
                                    std::span<const Vertex> targets, int k, int candidate_side);

struct HalfDiameter {
  int diameter = 0;
  // Vertices of V_side with half-eccentricity equal to the diameter.
  std::vector<Vertex> peripherals;
};

// diam(H_side) and its peripheral vertices by doubling + binary search over
// within_k_of_all; nullopt when the diameter exceeds `cap`.
std::optional<HalfDiameter> half_diam_small(const HalfSquareView& view, int cap);

}  // namespace arx
