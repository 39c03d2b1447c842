#pragma once

#include <cstdint>

namespace hermipd {

// SplitMix64 finalizer (Steele, Lea & Flood / Stafford mix13).
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// SplitMix64 generator.  Documented, tiny, and counter-based: state steps
/// by the golden-ratio increment and the output is the mixed counter, so a
/// stream is fully determined by its 64-bit seed.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    return mix64(state);
  }

  // Uniform in [0, bound) via rejection (bound >= 1).
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }
};

// Independent per-trial stream: the trial index is scrambled into the
// master seed so neighboring trials share no state sequence.
inline SplitMix64 trial_rng(std::uint64_t master_seed, std::uint64_t trial) {
  return SplitMix64(mix64(master_seed ^ mix64(trial + 1)));
}

}  // namespace hermipd
