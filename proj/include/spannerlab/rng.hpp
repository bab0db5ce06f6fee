// Copyright (c) spannerlab contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace spannerlab {

// Counter-based randomness: every draw is a pure function of (seed, stream ids),
// so trials are order-independent and reruns are bit-identical on any platform.
// std::uniform_real_distribution is implementation-defined and is avoided on purpose.
namespace rng {

inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mix(std::uint64_t seed, std::uint64_t a) { return splitmix64(seed ^ splitmix64(a)); }

inline std::uint64_t mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return splitmix64(mix(seed, a) ^ splitmix64(b + 0x51ed270b0a1c2ef3ULL));
}

inline std::uint64_t mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return splitmix64(mix(seed, a, b) ^ splitmix64(c + 0x63a91e14ab5c77cdULL));
}

// Uniform double in [0, 1) from the top 53 bits.
inline double to_unit(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

inline double uniform01(std::uint64_t seed, std::uint64_t a) { return to_unit(mix(seed, a)); }
inline double uniform01(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return to_unit(mix(seed, a, b));
}
inline double uniform01(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return to_unit(mix(seed, a, b, c));
}

// Unbiased integer in [0, n) via rejection on the top bits.
inline std::uint64_t below(std::uint64_t bits, std::uint64_t n, std::uint64_t reseed) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    while (bits >= limit) bits = splitmix64(bits + reseed);
    return bits % n;
}

inline int uniform_index(std::uint64_t seed, std::uint64_t a, std::uint64_t n) {
    return static_cast<int>(below(mix(seed, a), n, 0x2545f4914f6cdd1dULL));
}
inline int uniform_index(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<int>(below(mix(seed, a, b), n, 0x2545f4914f6cdd1dULL));
}

}  // namespace rng
}  // namespace spannerlab
