#pragma once

#include <cstdint>

namespace nfbeam {

// SplitMix64: 64-bit state advanced by the golden-ratio increment, output
// mixed with the murmur-style finalizer. Deterministic, splittable, and
// trivially seedable, which keeps every Monte-Carlo trial reproducible in
// isolation.
inline constexpr std::uint64_t splitmix64_increment = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class splitmix64 {
  public:
    explicit splitmix64(std::uint64_t state) : state_(state) {}

    std::uint64_t next() {
        state_ += splitmix64_increment;
        return splitmix64_mix(state_);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

// Independent stream for one (seed, trial) pair. The derivation depends on
// nothing else, so a given seed and trial index reproduce the same draws
// regardless of geometry, thread count, or trial execution order.
inline splitmix64 trial_stream(std::uint64_t seed, std::uint64_t trial_index) {
    return splitmix64(splitmix64_mix(seed ^ splitmix64_mix(trial_index * splitmix64_increment)));
}

}  // namespace nfbeam
