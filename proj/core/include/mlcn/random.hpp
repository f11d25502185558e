#pragma once

#include <cstdint>
#include <random>

namespace mlcn {

// Seeded random stream. Wraps mt19937_64 but derives uniforms and bounded
// integers itself so that draws are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  // Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

enum class StreamTag : std::uint64_t {
  kLayer1 = 1,
  kLayer2 = 2,
  kLayer3 = 3,
  kLayer2Regen = 4,
  kLayer3Regen = 5,
};

// Child seed for one random stream of one run. Every (master, replicate,
// step, tag) tuple maps to an independent stream, so any single run can be
// reconstructed without replaying the others.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t replicate, std::uint64_t step,
                          StreamTag tag) noexcept;

}  // namespace mlcn
