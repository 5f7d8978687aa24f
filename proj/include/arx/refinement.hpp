#pragma once

#include <cstddef>
#include <vector>

#include "arx/graph.hpp"

namespace arx {

// Sets of vertices stored back to back: set i is items[offsets[i]..offsets[i+1]).
struct SetList {
  std::vector<std::size_t> offsets{0};
  std::vector<Vertex> items;

  std::size_t count() const noexcept { return offsets.size() - 1; }
  std::span<const Vertex> operator[](std::size_t i) const noexcept {
    return {items.data() + offsets[i], items.data() + offsets[i + 1]};
  }
  void clear() {
    offsets.assign(1, 0);
    items.clear();
  }
  void close() { offsets.push_back(items.size()); }
};

// One greedy merge round of the partition-refinement technique: groups
// 0..p-1 come with witness sets W_i; repeatedly pick a vertex u lying in the
// largest number of still-unmerged W_i, merge those groups, and give the new
// group the witness set B = intersection of their W_i.
//
// Counts live in an array of count-indexed doubly linked lists with O(1)
// moves, so a round costs O(p + sum |W_i|). The most recently inserted vertex
// of the top list is picked.
class GroupMerger {
 public:
  explicit GroupMerger(Vertex universe);

  struct Failure {
    // kEmptyWitness: some group has no witness vertex.
    // kOverlap: a new witness set meets the witness set of a group that
    // was not merged with it.
    enum Kind { kNone, kEmptyWitness, kOverlap } kind = kNone;
    int group = -1;   // offending old group
    Vertex vertex = -1;
  };

  // Fills `merged` (new witness sets) and `group_of` (old -> new group).
  // Returns a failure description instead of throwing so callers can wrap it
  // in the certificate type of their module.
  Failure run(const SetList& witness, SetList& merged, std::vector<int>& group_of);

 private:
  unsigned next_generation();
  void unlink(Vertex v);
  void link(Vertex v);

  std::vector<int> count_;
  std::vector<Vertex> next_, prev_;
  std::vector<Vertex> head_;
  std::vector<std::size_t> inv_start_;
  std::vector<int> inv_items_;
  std::vector<unsigned> seen_, hit_stamp_;
  std::vector<int> hits_;
  unsigned gen_ = 0;
};

}  // namespace arx
