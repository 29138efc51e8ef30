#pragma once

#include <cstdint>

namespace qipa {

// SplitMix64. Tiny, deterministic across platforms; every seeded artifact in
// this project draws from it so that a seed pins outputs byte-exactly.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next_u64() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53 random bits.
    double next_double() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in [0, n); rejection sampling keeps the distribution exact.
    std::uint64_t next_below(std::uint64_t n) noexcept {
        const std::uint64_t limit = ~0ULL - ~0ULL % n;
        std::uint64_t v = next_u64();
        while (v >= limit) v = next_u64();
        return v % n;
    }

    double next_real(double lo, double hi) noexcept {
        return lo + (hi - lo) * next_double();
    }

    // Independent child stream (retry sub-seeds).
    SplitMix64 split() noexcept { return SplitMix64(next_u64()); }

private:
    std::uint64_t state_;
};

}  // namespace qipa
