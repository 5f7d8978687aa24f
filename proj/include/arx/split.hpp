#pragma once

#include <cstdint>
#include <vector>

#include "arx/graph.hpp"

namespace arx {

// A partition of V into a clique K and a stable set S with |S| = α(G).
// tag: 1 when the partition is unique, 2 when some y in S has K + {y}
// complete. (Tag 3, some x in K with S + {x} stable, only arises for
// partitions other than the normalized one returned here.)
struct SplitPartition {
  std::vector<Vertex> clique;  // sorted
  std::vector<Vertex> stable;  // sorted
  int tag = 1;
  bool unique() const noexcept { return tag == 1; }
};

// Case tag of an arbitrary clique/stable partition: 1, 2 or 3 as above.
int partition_case(const Graph& g, const std::vector<Vertex>& clique, const std::vector<Vertex>& stable);

// Degree-sequence split test. Throws NotSplit with an induced 2K2, C4 or C5
// when one is found (searched on graphs of moderate size; the witness is
// empty beyond that).
SplitPartition split_partition(const Graph& g);

// Absolute retract of split graphs: complete split or unique partition.
bool recognize_absolute_split(const Graph& g);
bool is_complete_split(const Graph& g, const SplitPartition& p);

struct PruneResult {
  Graph graph;                  // remaining induced subgraph
  std::vector<Vertex> kept;     // vertex i of graph is kept[i] of the input
  std::vector<Vertex> removed;  // removal order (input ids)
  std::vector<char> removed_from_clique;  // parallel to removed
  std::uint64_t work = 0;
};

// Repeatedly removes clique vertices of degree |K| - 1 and stable vertices
// of degree |K| (super-simplicial vertices), stopping at a single vertex.
// diam = 3 is preserved and the result has a unique split partition.
PruneResult prune_to_retract(const Graph& g);

// 0, 1, 2 or 3; throws NotSplit.
int split_diameter(const Graph& g);

}  // namespace arx
