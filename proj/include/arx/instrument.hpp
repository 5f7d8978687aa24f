#pragma once

#include <cstdint>

// Per-thread operation counter. Algorithms add the number of elementary
// steps they perform (adjacency entries scanned, list moves, clique-tree
// entries visited); benchmarks and the linearity checks read it.
namespace arx::ops {

inline thread_local std::uint64_t counter = 0;

inline void add(std::uint64_t n) noexcept { counter += n; }
inline void reset() noexcept { counter = 0; }
inline std::uint64_t read() noexcept { return counter; }

// Measures the work done since construction.
class Scope {
 public:
  Scope() noexcept : start_(counter) {}
  std::uint64_t elapsed() const noexcept { return counter - start_; }

 private:
  std::uint64_t start_;
};

}  // namespace arx::ops
