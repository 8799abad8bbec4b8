#pragma once

#include <cstdint>
#include <limits>
#include <random>

// Deterministic random-number plumbing. Every stochastic component of the
// library draws from std::mt19937_64 through the helpers below, so a seed
// plus the documented draw order fully determines a run on any platform
// (the mt19937_64 algorithm and these mappings are all bit-exact).

namespace laml {

// Finalizing permutation of the splitmix64 generator.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Output `index` of the splitmix64 stream whose state starts at `master`.
// splitmix64 advances its state by the golden-ratio increment and finalizes
// with mix64, so output i is available in closed form. Trial i of an
// experiment runs with derive_seed(master_seed, i); the streams of distinct
// indices are independent for all practical purposes and portable across
// implementations of this rule.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(master + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

// Uniform double in [0, 1) from the top 53 bits of one generator output.
// std::uniform_real_distribution is deliberately avoided: its draw sequence
// is implementation-defined, which would break cross-platform determinism.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased uniform integer in [0, n), n >= 1. Rejection sampling; consumes a
// variable number of generator outputs (almost always one).
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t max64 = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t rem = (max64 % n + 1) % n;  // 2^64 mod n
  for (;;) {
    const std::uint64_t r = rng();
    if (rem == 0 || r <= max64 - rem) {
      return r % n;
    }
  }
}

}  // namespace laml
