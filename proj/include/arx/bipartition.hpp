#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "arx/graph.hpp"

namespace arx {

struct Bipartition {
  // part[s] lists the vertices of side s in increasing order.
  std::array<std::vector<Vertex>, 2> part;
  // side[v] in {0, 1}.
  std::vector<std::uint8_t> side;

  std::size_t size(int s) const noexcept { return part[s].size(); }
};

// Two-colours a connected graph with vertex 0 on side 0. Throws NotBipartite
// carrying an odd cycle, NotConnected on disconnected input.
Bipartition bipartition(const Graph& g);

}  // namespace arx
