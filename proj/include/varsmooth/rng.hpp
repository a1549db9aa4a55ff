#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "varsmooth/errors.hpp"

namespace varsmooth {

namespace detail {

/// SplitMix64 output for counter `idx` of the stream keyed by `seed`.
inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t idx) {
    std::uint64_t z = seed + (idx + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Map 64 random bits to (0, 1]; never 0, so log() stays finite.
inline double unit_open(std::uint64_t bits) {
    return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
}

/// Map 64 random bits to [0, 1).
inline double unit_half_open(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Box-Muller normal draw from counters (counter, counter + 1).
inline double gaussian_at(double sigma, std::uint64_t seed, std::uint64_t counter) {
    const double u1 = unit_open(splitmix64_at(seed, counter));
    const double u2 = unit_open(splitmix64_at(seed, counter + 1));
    return sigma * std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace detail

/// Counter-based pseudo-random stream: draw n is a pure function of
/// (seed, n). Identical seeds replay identical sequences, and bulk fills can
/// be parallelized by indexing counters directly.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t counter() const noexcept { return counter_; }

    std::uint64_t next_u64() { return detail::splitmix64_at(seed_, counter_++); }

    /// Uniform in [0, 1).
    double next_unit() { return detail::unit_half_open(next_u64()); }

    /// Uniform in (0, 1].
    double next_unit_open() { return detail::unit_open(next_u64()); }

    /// Standard normal draw; consumes two counters.
    double next_gaussian() {
        const double v = detail::gaussian_at(1.0, seed_, counter_);
        counter_ += 2;
        return v;
    }

    void skip(std::uint64_t n) { counter_ += n; }

    /// Derive an unrelated stream, e.g. one per sweep worker.
    RngStream fork(std::uint64_t salt) const {
        return RngStream(detail::splitmix64_at(seed_, 0x5EED5EED5EED5EEDULL + salt));
    }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

} // namespace varsmooth
