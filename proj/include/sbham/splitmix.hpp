#pragma once

#include <cstdint>

namespace sbham {

// SplitMix64 (Steele/Lea/Vigna). Fixed here as the portable generator for
// all sampling: state advances by the golden-ratio increment and each
// output is the finalizer of the new state. Stream t of a seed is the
// generator whose initial state is mix64(seed + t * kGolden), so trials
// are independent counters and results reproduce across platforms.
struct SplitMix64 {
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

    std::uint64_t state = 0;

    static constexpr std::uint64_t mix64(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t next() {
        state += kGolden;
        return mix64(state);
    }

    static SplitMix64 stream(std::uint64_t seed, std::uint64_t t) {
        return SplitMix64{mix64(seed + t * kGolden)};
    }
};

}  // namespace sbham
