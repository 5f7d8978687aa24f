#include "arx/colored_graph.hpp"

#include <algorithm>
#include <string>

#include "arx/errors.hpp"

namespace arx {

ColoredGraph ColoredGraph::make(Graph g, std::vector<int> colour) {
  if (colour.size() != static_cast<std::size_t>(g.order())) {
    throw InvalidArgument("colouring has " + std::to_string(colour.size()) + " entries for " +
                          std::to_string(g.order()) + " vertices");
  }
  ColoredGraph cg;
  cg.k = colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end());
  cg.classes.assign(static_cast<std::size_t>(std::max(cg.k, 0)), {});
  for (Vertex v = 0; v < g.order(); ++v) {
    if (colour[v] < 1) throw InvalidArgument("colours must be positive");
    cg.classes[colour[v] - 1].push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (colour[w] == colour[v]) {
        throw InvalidArgument("improper colouring: edge " + std::to_string(v) + "-" + std::to_string(w));
      }
    }
  }
  for (int i = 1; i <= cg.k; ++i) {
    if (cg.cls(i).empty()) throw InvalidArgument("colour " + std::to_string(i) + " is unused");
  }
  cg.graph = std::move(g);
  cg.colour = std::move(colour);
  return cg;
}

}  // namespace arx
