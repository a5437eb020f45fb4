#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

namespace geofd {

// Seeded random stream used by all generators. The underlying engine is
// std::mt19937_64, whose output sequence for a given seed is fixed by the
// standard. Variate transforms are spelled out below instead of relying on
// std::*_distribution, whose output is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // splitmix64 finalizer.
    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    // Substream seed for an independent work unit (replication, cell, ...):
    // seed' = mix(mix(seed) ^ mix(index)). Parallel runs that assign one
    // substream per unit reproduce sequential runs exactly.
    static std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
        return mix(mix(seed) ^ mix(index));
    }

    static Rng substream(std::uint64_t seed, std::uint64_t index) {
        return Rng(substream_seed(seed, index));
    }

    std::uint64_t next_u64() { return gen_(); }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller; consumes exactly two draws.
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 <= 0.0) u1 = 0x1p-53;
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

    double normal(double mean, double sd) { return mean + sd * normal(); }

    // Uniform integer in [lo, hi]. Modulo bias is span/2^64, negligible for
    // the small spans used here.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1u;
        return lo + static_cast<std::int64_t>(next_u64() % span);
    }

    // Random sign, +1 or -1 equiprobable.
    double sign() { return (next_u64() & 1ull) ? 1.0 : -1.0; }

    // Fisher-Yates permutation of 0..n-1.
    std::vector<int> permutation(int n) {
        std::vector<int> p(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
        for (int i = n - 1; i > 0; --i) {
            const auto j = static_cast<std::size_t>(uniform_int(0, i));
            std::swap(p[static_cast<std::size_t>(i)], p[j]);
        }
        return p;
    }

private:
    std::mt19937_64 gen_;
};

} // namespace geofd
