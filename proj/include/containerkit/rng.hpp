#ifndef CONTAINERKIT_RNG_HPP
#define CONTAINERKIT_RNG_HPP

#include "containerkit/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace containerkit {

// All randomized audits draw from mt19937_64 through the helpers below.
// std::uniform_int_distribution is implementation-defined, so we hand-roll
// rejection sampling: identical streams on every platform for a given seed.
using Rng = std::mt19937_64;

// Uniform in [0, bound), bound >= 1.
inline std::uint64_t rng_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0) return 0;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % bound;
}

// Uniform in [lo, hi] inclusive.
inline long long rng_range(Rng& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(
                    rng_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// Bernoulli(p) for exact rational p in [0,1]: draws a 64-bit uniform and
// compares u/2^64 < p exactly. Fast path in 128-bit arithmetic when the
// (reduced) numerator and denominator fit in 63 bits.
inline bool rng_bernoulli(Rng& rng, const Rational& p) {
    if (p <= 0) return false;
    if (p >= 1) return true;
    const std::uint64_t u = rng();
    // u / 2^64 < num/den  <=>  u * den < num << 64
    const BigInt& num = numerator(p);
    const BigInt& den = denominator(p);
    const BigInt lim = BigInt(1) << 62;
    if (num < lim && den < lim) {
        const unsigned __int128 lhs =
            static_cast<unsigned __int128>(u) * static_cast<std::uint64_t>(den);
        const unsigned __int128 rhs =
            static_cast<unsigned __int128>(static_cast<std::uint64_t>(num)) << 64;
        return lhs < rhs;
    }
    return BigInt(u) * den < (num << 64);
}

// Derives a child seed; used so per-instance streams are independent of how
// work is split across workers.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
    h ^= index + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 27;
    h *= 0x94d049bb133111ebULL;
    h ^= h >> 31;
    return h;
}

// k distinct values from [1, n], sorted ascending.
inline std::vector<int> rng_subset(Rng& rng, int n, int k) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
    for (int i = 0; i < k; ++i) {
        int j = i + static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(n - i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    std::vector<int> out(pool.begin(), pool.begin() + k);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace containerkit

#endif
