#pragma once

#include <cstdint>

namespace beanbound {

/// splitmix64: tiny deterministic generator. Used instead of <random> so that
/// sampled parameter streams are bit-identical across platforms and can be
/// indexed per-sample (seed-splitting) for schedule-independent parallel runs.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Generator for the i-th sample of a seeded stream.
    static SplitMix64 for_index(uint64_t seed, uint64_t index) {
        SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ull * (index + 1)));
        g.next();
        return g;
    }
};

} // namespace beanbound
