#pragma once

#include <cstdint>

namespace tiltkit::lab {

// Deterministic 64-bit generator (splitmix64).  The standard <random>
// distributions are not pinned across library implementations, and the
// toolkit promises byte-identical reports for a given seed, so both the
// engine and every derived draw are implemented here with fixed integer
// arithmetic only.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Unbiased draw from {0, ..., bound-1} via rejection of the short zone.
    std::uint64_t uniform(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
        while (true) {
            std::uint64_t x = next();
            if (x >= threshold) return x % bound;
        }
    }

    // Inclusive integer range.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(uniform(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // [0, 1) with 53 random bits.
    double uniform_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool coin() { return (next() & 1u) != 0; }

private:
    std::uint64_t state_;
};

// Independent child stream for structured work items (cell index, trial
// index, ...).  Mixing through the engine twice decorrelates children whose
// labels differ in few bits.
inline SplitMix64 child_rng(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    SplitMix64 mixer(seed ^ (0x632BE59BD9B4E019ULL * (a + 1)) ^ (0x9E6C63D0876A9F4BULL * (b + 1)));
    std::uint64_t s = mixer.next();
    return SplitMix64(s);
}

}  // namespace tiltkit::lab
