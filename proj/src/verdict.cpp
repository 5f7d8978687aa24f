#include "arx/verdict.hpp"

namespace arx {

const char* to_string(Verdict::Outcome o) noexcept {
  switch (o) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kPassSampled: return "pass-sampled";
  }
  return "?";
}

}  // namespace arx
