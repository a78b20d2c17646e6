#pragma once

// Seeded random generator with platform-independent transforms. The standard
// distributions are implementation-defined, which would break byte-identical
// regeneration of profiles across toolchains, so the bounded-int, real and
// gaussian draws are implemented here on top of raw mt19937_64 output.

#include <cstdint>
#include <cmath>
#include <random>

namespace axisfit {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [0, bound), bound >= 1. Rejection sampling, unbiased.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    int next_int(int bound) { return static_cast<int>(next_below(static_cast<std::uint64_t>(bound))); }

    /// Uniform double in [0, 1) with 53 bits of precision.
    double next_real() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool next_bool(double p) { return next_real() < p; }

    /// Standard normal via the Marsaglia polar method.
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * next_real() - 1.0;
            v = 2.0 * next_real() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        double mul = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * mul;
        have_spare_ = true;
        return u * mul;
    }

    /// Derives an independent stream for a sub-task, stable across runs.
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace axisfit
