#pragma once

#include <string>
#include <vector>

#include "arx/graph.hpp"

namespace arx {

// Outcome of a membership or property check. A failing verdict carries a
// witness that can be re-evaluated to reproduce the violation; what the
// vertices and radii mean is spelled out in `detail`.
struct Verdict {
  enum Outcome { kPass, kFail, kPassSampled };
  Outcome outcome = kPass;
  std::string detail;
  std::vector<Vertex> witness;
  std::vector<int> radii;  // parallel to witness when the witness is a ball family

  bool ok() const noexcept { return outcome != kFail; }
  static Verdict pass() { return {}; }
  static Verdict sampled() { return {kPassSampled, {}, {}, {}}; }
  static Verdict fail(std::string detail, std::vector<Vertex> witness, std::vector<int> radii = {}) {
    return {kFail, std::move(detail), std::move(witness), std::move(radii)};
  }
};

const char* to_string(Verdict::Outcome o) noexcept;

}  // namespace arx
