#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace little::rng {

// Counter-based pseudo-random primitives.
//
// Every random quantity in this library is a pure function of
// (seed, counter).  There is no generator state to advance, so entry k of a
// matrix, trial t of an experiment, and worker w of a thread pool all read
// the same values no matter who computes them or in which order.  The map
// below is frozen; changing any constant changes every seeded result and is
// a breaking change.
//
//   mix64(z)            splitmix64 finalizer (bias-free 64-bit mixer)
//   stream_at(s, k)     mix64(s + (k + 1) * golden)   k-th word of stream s
//   derive_seed(m,p,t)  stream_at(stream_at(m, p), t) two-level splitting
//
// Gaussian deviate k consumes counters 2k and 2k+1 through the Box-Muller
// cosine branch; sign deviate k consumes counter k and takes its top bit.

inline constexpr std::uint64_t golden = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

/// Word k (k >= 0) of the stream identified by seed.
constexpr std::uint64_t stream_at(std::uint64_t seed, std::uint64_t k) noexcept {
    return mix64(seed + (k + 1) * golden);
}

/// Stable sub-seed for (purpose, index) under a master seed.  Purposes keep
/// unrelated consumers (instance draws, paired comparison draws, ...) on
/// disjoint streams; indices separate trials within a purpose.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t purpose,
                                    std::uint64_t index) noexcept {
    return stream_at(stream_at(master, purpose), index);
}

/// Purpose tags used by the experiment harness.
enum class purpose : std::uint64_t {
    instance = 0,      // per-trial instance of the problem under study
    compare_full = 1,  // paired comparison: full asymmetric instance
    compare_one = 2,   // paired comparison: first auxiliary square instance
    compare_two = 3,   // paired comparison: second auxiliary square instance
    sizing = 4,        // random shapes in randomized test sweeps
};

/// Map 64 random bits to (0, 1].  The top 53 bits plus a half-ulp offset keep
/// 0 unattainable, so log(u) is safe; the all-ones draw is a rounding tie
/// that lands exactly on 1, which the Gaussian map tolerates.
constexpr double uniform01(std::uint64_t bits) noexcept {
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

/// Standard normal deviate k of the stream: Box-Muller, cosine branch.
inline double normal_at(std::uint64_t seed, std::uint64_t k) noexcept {
    const double u1 = uniform01(stream_at(seed, 2 * k));
    const double u2 = uniform01(stream_at(seed, 2 * k + 1));
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

/// Fair sign deviate k of the stream: +1 if the top bit is set, else -1.
constexpr double sign_at(std::uint64_t seed, std::uint64_t k) noexcept {
    return (stream_at(seed, k) >> 63) ? 1.0 : -1.0;
}

/// Integer in [0, bound) from deviate k; bound must be positive.  Uses the
/// high bits via 128-bit multiply, which is exact enough for the small
/// bounds used in randomized tests.
constexpr std::uint64_t below(std::uint64_t seed, std::uint64_t k, std::uint64_t bound) noexcept {
    using u128 = unsigned __int128;
    return static_cast<std::uint64_t>(
        (static_cast<u128>(stream_at(seed, k)) * static_cast<u128>(bound)) >> 64);
}

} // namespace little::rng
