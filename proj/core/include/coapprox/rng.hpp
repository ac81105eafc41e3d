#pragma once

#include "coapprox/numeric.hpp"

#include <cstdint>

namespace coapprox {

/// SplitMix64: tiny deterministic generator, identical across platforms.
/// split() derives an independent child stream, so sample evaluations can
/// run in parallel without perturbing the sequence.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi].
    double next_in(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Uniform integer in [lo, hi], inclusive.
    std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

    /// Uniform rational k/denom with k integer and value in [lo, hi].
    Rational next_rational(std::int64_t lo, std::int64_t hi, std::int64_t denom = 1) {
        return Rational(next_int(lo * denom, hi * denom), denom);
    }

    SplitMix64 split() { return SplitMix64(next()); }

private:
    std::uint64_t state_;
};

}  // namespace coapprox
