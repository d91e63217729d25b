#pragma once

#include <cstdint>
#include <random>

namespace ternary {

// splitmix64; used for seed derivation so that child streams are decorrelated
// even for adjacent task indices.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seeded PRNG wrapper. All sampling goes through the helpers below instead of
// <random> distributions, whose output is implementation-defined; mt19937_64
// raw output is pinned by the standard, so runs are bit-reproducible across
// compilers.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), eng_(splitmix64(seed)) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return eng_(); }

    // Unbiased integer in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * ((~std::uint64_t(0)) / bound);
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % bound;
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() { return double(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi].
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    bool coin() { return (next_u64() >> 63) != 0; }

    int sign() { return coin() ? 1 : -1; }

    int trit() { return int(below(3)) - 1; }

    // Independent child stream; deterministic in (seed, index).
    Rng child(std::uint64_t index) const {
        return Rng(splitmix64(seed_ ^ (0x6a09e667f3bcc909ULL + index)));
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 eng_;
};

}  // namespace ternary
