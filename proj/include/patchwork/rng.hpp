#pragma once

#include <cstdint>

namespace patchwork {

/// SplitMix64 finaliser, used as a counter-based hash.
inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/**
 * Counter-based generator: word `counter` of the stream (seed, trial).
 * Streams for different trials are independent of evaluation order, so
 * trials may run in any order or in parallel.
 */
inline std::uint64_t stream_word(std::uint64_t seed, std::uint64_t trial, std::uint64_t counter) {
    const std::uint64_t key = splitmix64(seed ^ splitmix64(trial ^ 0x5bd1e9955bd1e995ULL));
    return splitmix64(key + splitmix64(counter));
}

inline bool stream_bit(std::uint64_t seed, std::uint64_t trial, std::uint64_t index) {
    return (stream_word(seed, trial, index >> 6) >> (index & 63)) & 1u;
}

}  // namespace patchwork
