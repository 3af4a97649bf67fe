#pragma once

#include <cstdint>

namespace fleetmin {

// SplitMix64. Chosen over <random> engines because its output is fully
// specified by the seed alone, so generated instances and search results
// reproduce bit-for-bit across platforms and languages.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1), 53 significant bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, bound). Modulo bias is irrelevant for the
    // desk-scale bounds used here and keeps the sequence platform-stable.
    std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }
};

// Derives an independent per-case seed from a master seed, so batches of
// cases can be generated (and parallelized) without sharing a stream.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    SplitMix64 mix(master ^ (0xA0761D6478BD642Full * (index + 1)));
    return mix.next();
}

}  // namespace fleetmin
