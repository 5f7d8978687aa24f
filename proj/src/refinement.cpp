#include "arx/refinement.hpp"

#include <algorithm>

#include "arx/instrument.hpp"

namespace arx {

GroupMerger::GroupMerger(Vertex universe)
    : count_(static_cast<std::size_t>(universe), 0),
      next_(static_cast<std::size_t>(universe), -1),
      prev_(static_cast<std::size_t>(universe), -1),
      inv_start_(static_cast<std::size_t>(universe) + 1, 0),
      seen_(static_cast<std::size_t>(universe), 0),
      hit_stamp_(static_cast<std::size_t>(universe), 0),
      hits_(static_cast<std::size_t>(universe), 0) {}

unsigned GroupMerger::next_generation() {
  if (++gen_ == 0) {
    // Wrapped: stale stamps could collide with new generations.
    std::fill(seen_.begin(), seen_.end(), 0u);
    std::fill(hit_stamp_.begin(), hit_stamp_.end(), 0u);
    gen_ = 1;
  }
  return gen_;
}

void GroupMerger::unlink(Vertex v) {
  Vertex p = prev_[v], n = next_[v];
  if (p >= 0) {
    next_[p] = n;
  } else {
    head_[count_[v]] = n;
  }
  if (n >= 0) prev_[n] = p;
}

void GroupMerger::link(Vertex v) {
  Vertex h = head_[count_[v]];
  prev_[v] = -1;
  next_[v] = h;
  if (h >= 0) prev_[h] = v;
  head_[count_[v]] = v;
}

GroupMerger::Failure GroupMerger::run(const SetList& witness, SetList& merged,
                                      std::vector<int>& group_of) {
  const std::size_t p = witness.count();
  merged.clear();
  group_of.assign(p, -1);
  const unsigned gen = next_generation();
  std::uint64_t work = p;

  // Incidence counts and the list of distinct witness vertices.
  std::vector<Vertex> touched;
  for (std::size_t i = 0; i < p; ++i) {
    auto w = witness[i];
    if (w.empty()) return {Failure::kEmptyWitness, static_cast<int>(i), -1};
    for (Vertex v : w) {
      if (seen_[v] != gen) {
        seen_[v] = gen;
        count_[v] = 0;
        touched.push_back(v);
      }
      ++count_[v];
    }
    work += w.size();
  }

  // Inverted index vertex -> groups, laid out by order of first touch.
  std::vector<std::size_t> start(touched.size() + 1, 0);
  std::vector<std::size_t> fill(touched.size(), 0);
  for (std::size_t j = 0; j < touched.size(); ++j) {
    Vertex v = touched[j];
    start[j + 1] = start[j] + static_cast<std::size_t>(count_[v]);
    inv_start_[v] = j;  // temporary slot index
  }
  inv_items_.resize(start.back());
  for (std::size_t i = 0; i < p; ++i) {
    for (Vertex v : witness[i]) {
      std::size_t j = inv_start_[v];
      inv_items_[start[j] + fill[j]++] = static_cast<int>(i);
    }
  }

  head_.assign(p + 1, -1);
  int top = 0;
  for (Vertex v : touched) {
    link(v);
    top = std::max(top, count_[v]);
  }

  std::vector<int> picked;
  std::size_t remaining = p;
  while (remaining > 0) {
    while (top > 0 && head_[top] < 0) --top;
    if (top == 0) {
      // Unmerged groups remain but no vertex covers them.
      for (std::size_t i = 0; i < p; ++i)
        if (group_of[i] < 0) return {Failure::kEmptyWitness, static_cast<int>(i), -1};
    }
    Vertex u = head_[top];
    const int j = static_cast<int>(merged.count());
    picked.clear();
    std::size_t slot = inv_start_[u];
    for (std::size_t q = start[slot]; q < start[slot + 1]; ++q) {
      int i = inv_items_[q];
      if (group_of[i] < 0) {
        group_of[i] = j;
        picked.push_back(i);
      }
    }
    remaining -= picked.size();
    work += picked.size();

    // Intersection of the picked witness sets by hit counting.
    const int need = static_cast<int>(picked.size());
    const unsigned hit_gen = next_generation();
    for (int i : picked) {
      for (Vertex v : witness[i]) {
        if (hit_stamp_[v] != hit_gen) {
          hit_stamp_[v] = hit_gen;
          hits_[v] = 0;
        }
        if (++hits_[v] == need) merged.items.push_back(v);
      }
    }
    merged.close();

    // Drop the picked groups from the incidence counts.
    for (int i : picked) {
      auto w = witness[i];
      work += 2 * w.size();
      for (Vertex v : w) {
        unlink(v);
        --count_[v];
        if (count_[v] > 0) link(v);
      }
    }
    // Every vertex of the new witness set must now be uncovered; otherwise
    // it also lies in the witness set of a group that was not merged.
    for (Vertex v : merged[static_cast<std::size_t>(j)]) {
      if (count_[v] > 0) {
        int other = -1;
        std::size_t s = inv_start_[v];
        for (std::size_t q = start[s]; q < start[s + 1]; ++q)
          if (group_of[inv_items_[q]] < 0) other = inv_items_[q];
        ops::add(work);
        return {Failure::kOverlap, other, v};
      }
    }
  }
  ops::add(work);
  return {};
}

}  // namespace arx
