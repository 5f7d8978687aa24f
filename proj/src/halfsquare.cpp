#include "arx/halfsquare.hpp"

#include <algorithm>
#include <string>

#include "arx/instrument.hpp"
#include "arx/refinement.hpp"

namespace arx {

HalfSquareView::HalfSquareView(const Graph& base, int side)
    : HalfSquareView(base, std::make_shared<const Bipartition>(bipartition(base)), side) {}

HalfSquareView::HalfSquareView(const Graph& base, std::shared_ptr<const Bipartition> parts, int side)
    : base_(&base), parts_(std::move(parts)), side_(side) {
  if (side != 0 && side != 1) throw InvalidArgument("half-square side must be 0 or 1");
  if (parts_->side.size() != static_cast<std::size_t>(base.order())) {
    throw InvalidArgument("bipartition does not match graph");
  }
}

Distances half_bfs(const HalfSquareView& view, Vertex source) {
  if (!view.on_side(source)) {
    throw InvalidArgument("half_bfs: vertex " + std::to_string(source) + " is not on side " +
                          std::to_string(view.side()));
  }
  Distances d = bfs(view.base(), {source});
  for (Vertex v = 0; v < view.base().order(); ++v) {
    if (view.parts().side[v] != view.side()) {
      d[v] = kUnreached;
    } else if (d[v] != kUnreached) {
      d[v] /= 2;
    }
  }
  return d;
}

std::vector<Vertex> within_k_of_all(const HalfSquareView& view, std::span<const Vertex> targets,
                                    int k, int candidate_side) {
  return within_k_of_all(view.base(), view.parts().side, targets, k, candidate_side);
}

std::vector<Vertex> within_k_of_all(const Graph& g, const std::vector<std::uint8_t>& side,
                                    std::span<const Vertex> targets, int k, int candidate_side) {
  if (targets.empty()) throw InvalidArgument("within_k_of_all: empty target set");
  if (k < 0) throw InvalidArgument("within_k_of_all: negative k");
  if (candidate_side != 0 && candidate_side != 1) throw InvalidArgument("within_k_of_all: bad side");
  std::vector<Vertex> t(targets.begin(), targets.end());
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  for (Vertex x : t)
    if (!g.contains(x)) throw InvalidArgument("within_k_of_all: target out of range");
  const int target_side = side[t[0]];
  for (Vertex x : t)
    if (side[x] != target_side) throw InvalidArgument("within_k_of_all: targets on both sides");
  if ((target_side + k) % 2 != candidate_side) {
    throw ParityError("within_k_of_all: k=" + std::to_string(k) + " cannot relate side " +
                      std::to_string(target_side) + " to side " + std::to_string(candidate_side));
  }
  if (g.order() == 1) return t;

  // Round 0: singleton groups, B_i = {t_i}.
  SetList b, w, merged;
  for (Vertex x : t) {
    b.items.push_back(x);
    b.close();
  }
  std::vector<int> group_of_target(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) group_of_target[i] = static_cast<int>(i);

  GroupMerger merger(g.order());
  std::vector<unsigned> mark(static_cast<std::size_t>(g.order()), 0);
  unsigned stamp = 0;
  std::vector<int> group_of;
  for (int step = 1; step <= k; ++step) {
    // W_i = N(B_i). The B_i are disjoint, so this is O(m) per round.
    w.clear();
    std::uint64_t scanned = 0;
    for (std::size_t i = 0; i < b.count(); ++i) {
      ++stamp;
      for (Vertex x : b[i]) {
        auto nb = g.neighbors(x);
        scanned += nb.size();
        for (Vertex y : nb) {
          if (mark[y] != stamp) {
            mark[y] = stamp;
            w.items.push_back(y);
          }
        }
      }
      w.close();
    }
    ops::add(scanned);
    auto fail = merger.run(w, merged, group_of);
    if (fail.kind != GroupMerger::Failure::kNone) {
      std::vector<Vertex> witness;
      if (fail.vertex >= 0) witness.push_back(fail.vertex);
      for (std::size_t i = 0; i < t.size(); ++i)
        if (group_of_target[i] == fail.group) witness.push_back(t[i]);
      throw NotRetract(fail.kind == GroupMerger::Failure::kOverlap
                           ? "witness sets overlap at step " + std::to_string(step)
                           : "empty witness set at step " + std::to_string(step),
                       std::move(witness), step);
    }
    for (int& grp : group_of_target) grp = group_of[grp];
    std::swap(b, merged);
  }
  if (b.count() != 1) return {};
  std::vector<Vertex> out(b[0].begin(), b[0].end());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<HalfDiameter> half_diam_small(const HalfSquareView& view, int cap) {
  if (cap < 1) throw InvalidArgument("half_diam_small: cap must be positive");
  auto verts = view.vertices();
  const std::size_t n = verts.size();
  if (n == 1) return HalfDiameter{0, {verts[0]}};
  auto all_within = [&](int k) {
    return within_k_of_all(view, verts, 2 * k, view.side()).size() == n;
  };
  // Invariant: all_within(lo) is false, all_within(hi) is true.
  int lo = 0, hi = 1;
  while (!all_within(hi)) {
    if (hi >= cap) return std::nullopt;
    lo = hi;
    hi = std::min(cap, 2 * hi);
  }
  while (hi - lo > 1) {
    int mid = lo + (hi - lo) / 2;
    if (all_within(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  HalfDiameter out;
  out.diameter = hi;
  auto inner = within_k_of_all(view, verts, 2 * (hi - 1), view.side());
  std::set_difference(verts.begin(), verts.end(), inner.begin(), inner.end(),
                      std::back_inserter(out.peripherals));
  return out;
}

}  // namespace arx
