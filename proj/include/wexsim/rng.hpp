#pragma once

#include <cstdint>
#include <random>

namespace wexsim {

// Reproducible random source for simulation runs.
//
// The engine is std::mt19937_64, whose output stream is pinned by the C++
// standard, so replays agree across platforms and compilers. The standard
// distribution adapters are NOT portable, so every mapping from raw 64-bit
// words to doubles or indices is spelled out here and is part of the replay
// contract:
//
//   next_double():    (x >> 11) * 2^-53, uniform on [0, 1)
//   uniform(a, b):    a + next_double() * (b - a)
//   uniform_index(n): floor(next_double() * n), one draw per call
//
// Each call consumes exactly one engine word.
class Rng {
 public:
  static constexpr const char* kAlgorithm = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    return lo + next_double() * (hi - lo);
  }

  std::size_t uniform_index(std::size_t n) {
    const auto k = static_cast<std::size_t>(next_double() * static_cast<double>(n));
    return k < n ? k : n - 1;  // guard against round-up at the top end
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace wexsim
