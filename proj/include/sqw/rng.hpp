#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace sqw {

// splitmix64: 64-bit state, gamma 0x9E3779B97F4A7C15, finalizer from
// Steele/Lea/Flood. Portable and trivially re-implementable, so seeded
// digit-set samples reproduce across languages.
struct SplitMix64 {
    uint64_t state = 0;

    explicit SplitMix64(uint64_t seed = 0) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // unbiased uniform draw from [0, n) by rejection
    uint64_t bounded(uint64_t n) {
        uint64_t limit = ~uint64_t(0) - ~uint64_t(0) % n;
        uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }
};

// uniform size-k subset of {0,...,n-1}, returned sorted (partial Fisher-Yates)
inline std::vector<uint64_t> sample_subset(uint64_t n, uint64_t k, uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<uint64_t> pool(n);
    for (uint64_t i = 0; i < n; ++i) pool[i] = i;
    for (uint64_t i = 0; i < k; ++i) {
        uint64_t j = i + rng.bounded(n - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace sqw
