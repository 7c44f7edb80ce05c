#pragma once

#include <cstdint>
#include <cmath>

namespace mbk {

// splitmix64 mixer; stable across platforms and standard libraries so that
// every seeded operation reproduces bit for bit.
inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Derive an independent stream for (seed, salt); salts are retry counters,
// restart indices and the like.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
    return splitmix64(splitmix64(seed ^ 0xA0761D6478BD642FULL) + salt);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(splitmix64(seed ^ 0x8BB84B93962EACC9ULL)) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // [0,1)
    double uniform01() { return double(next_u64() >> 11) * 0x1.0p-53; }
    // (0,1]
    double uniform_pos() { return double((next_u64() >> 11) + 1) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // inclusive on both ends
    int uniform_int(int lo, int hi) {
        return lo + int(next_u64() % std::uint64_t(hi - lo + 1));
    }

    bool coin() { return (next_u64() & 1u) != 0; }

    // Box-Muller with a cached spare; no reliance on std::normal_distribution
    // so streams are identical everywhere.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform_pos();
        double u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double th = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(th);
        has_spare_ = true;
        return r * std::cos(th);
    }

private:
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace mbk
