#pragma once
// Deterministic PRNG (splitmix64). std::uniform_int_distribution is
// implementation-defined, and the CLI promises byte-identical output for a
// given seed, so the generator is pinned here. Weight vectors for initial
// form sampling draw integer entries uniformly from [0, 10^6]; per-sample
// streams are derived as base_seed + counter.

#include "tropdisc/numeric.hpp"

#include <cstdint>

namespace tropdisc {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound] inclusive, by rejection
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t span = bound + 1;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % span;
    }

    // uniform in [lo, hi] inclusive
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo)));
    }

private:
    std::uint64_t state_;
};

inline constexpr long kWeightBound = 1000000;

// the standard generic weight draw used across the library
inline IntVec sample_weight_vector(int n, std::uint64_t seed) {
    Rng rng(seed);
    IntVec w(n);
    for (int i = 0; i < n; ++i) w[i] = Int(static_cast<long>(rng.below(kWeightBound)));
    return w;
}

} // namespace tropdisc
