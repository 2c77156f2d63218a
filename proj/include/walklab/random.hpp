#pragma once

#include <cstdint>
#include <random>

namespace walklab {

/// SplitMix64 finaliser. Used to decorrelate seeds; never as a stream.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed of trial `index` under `master_seed`. Depends only on the pair, so
/// trials can run in any order or on any thread with identical results.
constexpr std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t index) {
    return mix64(mix64(master_seed) ^ mix64(index + 0x632BE59BD9B4E019ULL));
}

/// All library randomness goes through this engine: mt19937_64 seeded from
/// a mixed 64-bit seed. Conversions to double and to bounded integers are
/// done here (not via <random> distributions, whose output is
/// implementation-defined) so streams are reproducible across standard
/// libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound), bound > 0 (Lemire's method).
    std::uint64_t below(std::uint64_t bound);

  private:
    std::mt19937_64 engine_;
};

} // namespace walklab
