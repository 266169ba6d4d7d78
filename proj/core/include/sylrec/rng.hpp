#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace sylrec {

/// Deterministic seeded generator used by all synthetic-data code. The
/// algorithm is pinned so identical seeds reproduce identical data on any
/// platform:
///   - core stream: splitmix64 (Steele, Lea, Flood 2014)
///   - uniform01:   (next() >> 11) * 2^-53, in [0, 1)
///   - below(n):    next() % n
///   - gaussian:    Box-Muller from two fresh uniforms per sample
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [0, bound). bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Standard normal deviate.
    double gaussian() {
        double u1 = uniform01();
        const double u2 = uniform01();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::uint64_t state_;
};

/// Stable per-index seed derivation for instance streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return SeededRng(seed + 0x9E3779B97F4A7C15ULL * (index + 1)).next();
}

}  // namespace sylrec
