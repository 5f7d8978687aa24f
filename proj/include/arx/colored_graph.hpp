#pragma once

#include <vector>

#include "arx/graph.hpp"

namespace arx {

// A graph with a proper colouring by 1..k; every colour class is nonempty.
struct ColoredGraph {
  Graph graph;
  int k = 0;
  std::vector<int> colour;                  // colour[v] in 1..k
  std::vector<std::vector<Vertex>> classes;  // classes[i - 1] = V_i, sorted

  // Validates properness and that colours 1..max are all used.
  static ColoredGraph make(Graph g, std::vector<int> colour);

  const std::vector<Vertex>& cls(int i) const { return classes[static_cast<std::size_t>(i - 1)]; }
};

}  // namespace arx
