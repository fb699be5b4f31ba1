#pragma once

#include <cstdint>

namespace csusy {

/// 64-bit linear congruential generator used for all randomized sweeps.
/// state' = state * 6364136223846793005 + 1442695040888963407 (mod 2^64),
/// doubles drawn from the top 53 bits. Fixed constants keep verification
/// runs reproducible across platforms and languages.
class Lcg64 {
public:
    explicit Lcg64(std::uint64_t seed = 42) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

} // namespace csusy
