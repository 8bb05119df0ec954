#pragma once

#include <cmath>
#include <cstdint>

#include "rclus/types.hpp"

namespace rclus::rng {

// SplitMix64 finalizer. Fast, full-period, good avalanche; used both to mix
// stream keys and to step the stream state.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Purpose tags keeping independent decisions on independent streams.
enum class Tag : std::uint64_t {
    NearestTie = 1,
    NncerTie = 2,
    KmeansInit = 3,
    GenNormals = 4,
    GenShapes = 5,
    GenCopula = 6,
    Fuzz = 7,
};

/// Deterministic counter-based stream. Output n is a pure function of
/// (seed, tag, key, n), so evaluation order and thread count never matter.
class Stream {
public:
    Stream(Seed seed, Tag tag, std::uint64_t key = 0) {
        state_ = mix64(mix64(mix64(seed.value) ^ static_cast<std::uint64_t>(tag)) ^ key);
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform on [0, 1), 53-bit resolution.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n). Rejection sampling keeps it exactly uniform.
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    /// Standard normal via Box-Muller (both draws consumed, one returned;
    /// keeps the stream a pure counter without cached state).
    double next_normal() {
        double u1 = next_double();
        double u2 = next_double();
        while (u1 <= 0.0) u1 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    /// Gamma(shape, 1) via Marsaglia-Tsang; shape < 1 handled by the
    /// standard boost-by-one power trick.
    double next_gamma(double shape) {
        if (shape < 1.0) {
            const double u = next_double();
            return next_gamma(shape + 1.0) * std::pow(u > 0 ? u : 1e-300, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x = next_normal();
            double v = 1.0 + c * x;
            if (v <= 0.0) continue;
            v = v * v * v;
            const double u = next_double();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (u > 0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    double next_chisq(double df) { return 2.0 * next_gamma(0.5 * df); }

private:
    std::uint64_t state_ = 0;
};

}  // namespace rclus::rng
