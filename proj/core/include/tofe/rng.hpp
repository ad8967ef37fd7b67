#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace tofe {

// Deterministic random source. mt19937 output is pinned by the standard;
// the float/normal conversions below are hand-rolled so streams are
// reproducible across standard-library implementations (std distributions
// are not).
class Rng {
 public:
  explicit Rng(uint32_t seed) : gen_(seed) {}

  uint32_t next_u32() { return gen_(); }

  // Uniform in [0, 1), 24 bits of mantissa.
  float uniform() {
    return static_cast<float>(gen_() >> 8) * (1.0f / 16777216.0f);
  }

  float uniform(float lo, float hi) { return lo + (hi - lo) * uniform(); }

  // Inclusive on both ends.
  int uniform_int(int lo, int hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>((static_cast<uint64_t>(gen_()) * span) >> 32);
  }

  // Box-Muller; consumes two draws per call, no cached spare.
  float normal() {
    float u1 = (static_cast<float>(gen_() >> 8) + 0.5f) * (1.0f / 16777216.0f);
    float u2 = static_cast<float>(gen_() >> 8) * (1.0f / 16777216.0f);
    float r = std::sqrt(-2.0f * std::log(u1));
    return r * std::cos(6.28318530717958647692f * u2);
  }

 private:
  std::mt19937 gen_;
};

// Splitmix-style seed derivation so independent streams can be spawned
// from one experiment seed without overlap.
inline uint32_t derive_seed(uint32_t base, uint32_t salt) {
  uint64_t z = (static_cast<uint64_t>(base) << 32) | salt;
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  z = z ^ (z >> 31);
  return static_cast<uint32_t>(z & 0xFFFFFFFFull);
}

}  // namespace tofe
