#ifndef FAIRDIV_RNG_HPP
#define FAIRDIV_RNG_HPP

#include <cstdint>

namespace fairdiv {

// The simulator's generator identity is part of the external contract:
// stats must be bit-reproducible from (seed, runs) alone, in any
// reimplementation. We fix SplitMix64 (Steele, Lea & Flood, "Fast
// splittable pseudorandom number generators", OOPSLA 2014), all
// arithmetic mod 2^64.

// the SplitMix64 output mixing function
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

struct SplitMix64 {
    std::uint64_t state = 0;

    constexpr explicit SplitMix64(std::uint64_t initial) : state(initial) {}

    constexpr std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        return mix64(state);
    }
};

// Run r of a simulation draws from a SplitMix64 whose initial state is
// mix64(seed XOR mix64(r + 1)): streams are decorrelated and depend
// only on (seed, r), so the worker partitioning cannot change results.
constexpr SplitMix64 run_stream(std::uint64_t seed, std::uint64_t run_index) {
    return SplitMix64(mix64(seed ^ mix64(run_index + 1)));
}

} // namespace fairdiv

#endif
