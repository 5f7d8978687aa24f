#include "arx/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "arx/errors.hpp"

namespace arx {

namespace {

constexpr int kNone = std::numeric_limits<int>::max();

// Shared driver. `members` is the vertex set being estimated; `scale` maps a
// base-graph distance between members to the estimated metric (2 for the
// half-square, 1 for a colour class).
PeripheralEstimate estimate_members(const Graph& g, std::span<const Vertex> members, int scale,
                                    int window, Seed seed, const std::string& tag,
                                    const SamplingOptions& opts) {
  if (window < 1) throw InvalidArgument("sampling window must be at least 1");
  PeripheralEstimate out;
  out.detail.seed = seed;
  out.detail.estimate.assign(static_cast<std::size_t>(g.order()), 0);
  if (members.size() == 1) {
    out.detail.p = 1.0;
    out.detail.sample = {members[0]};
    out.peripherals = {members[0]};
    return out;
  }
  double p = opts.force_all ? 1.0
                            : std::min(1.0, opts.c * std::log(static_cast<double>(members.size())) / window);
  out.detail.p = p;
  Rng rng(seed, tag);
  for (Vertex v : members) {
    // One draw per member in index order, whatever p is, so the stream
    // position does not depend on earlier outcomes.
    double x = rng.unit();
    if (p >= 1.0 || x < p) out.detail.sample.push_back(v);
  }
  const auto& sample = out.detail.sample;

  int workers = std::max(1, std::min<int>(opts.threads, static_cast<int>(sample.size())));
  std::vector<std::vector<int>> best(static_cast<std::size_t>(workers),
                                     std::vector<int>(static_cast<std::size_t>(g.order()), kNone));
  auto work = [&](int w) {
    BfsScratch bfs_state(g.order());
    auto& mine = best[static_cast<std::size_t>(w)];
    for (std::size_t s = static_cast<std::size_t>(w); s < sample.size(); s += static_cast<std::size_t>(workers)) {
      Vertex src[] = {sample[s]};
      bfs_state.run(g, src);
      int ecc = 0;
      for (Vertex x : members) ecc = std::max(ecc, bfs_state.dist(x) / scale);
      for (Vertex x : members) {
        int d = bfs_state.dist(x) / scale;
        if (d <= window) mine[x] = std::min(mine[x], d + ecc);
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (Vertex x : members) {
    int m = kNone;
    for (const auto& b : best) m = std::min(m, b[x]);
    out.detail.estimate[x] = m == kNone ? 0 : m;
    out.diameter = std::max(out.diameter, out.detail.estimate[x]);
  }
  for (Vertex x : members)
    if (out.detail.estimate[x] == out.diameter) out.peripherals.push_back(x);
  return out;
}

}  // namespace

PeripheralEstimate peripherals_by_sampling_half(const HalfSquareView& view, int k, Seed seed,
                                                const SamplingOptions& opts) {
  return estimate_members(view.base(), view.vertices(), 2, k, seed,
                          view.side() == 0 ? "sample-half-0" : "sample-half-1", opts);
}

PeripheralEstimate peripherals_by_sampling_colour(const ColoredGraph& cg, int colour, int window,
                                                  Seed seed, const SamplingOptions& opts) {
  if (colour < 1 || colour > cg.k) throw InvalidArgument("colour out of range");
  const auto& members = cg.cls(colour);
  return estimate_members(cg.graph, members, 1, window, seed,
                          "sample-colour-" + std::to_string(colour), opts);
}

}  // namespace arx
