#pragma once

#include <cstdint>
#include <vector>

namespace graphsee {

/// SplitMix64: 64-bit counter-based generator (state advances by the golden
/// gamma, output is a fixed bit-mix of the counter). Replicate streams are
/// seeded as base_seed + replicate_index; identical seeds give identical
/// sequences on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0,1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound), unbiased (rejection sampling).
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = -bound % bound;  // 2^64 mod bound
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::uint64_t state_;
};

/// Simple random sample without replacement: n of {0..population-1}, sorted.
std::vector<int> srs_sample(int population, int n, SplitMix64& rng);

}  // namespace graphsee
