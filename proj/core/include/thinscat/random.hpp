#pragma once

#include <cstdint>

namespace thinscat {

// Counter-based generator: every draw is a pure function of
// (seed, stream, counter), so cells can be generated in any order or in
// parallel with identical results.

constexpr std::uint64_t splitmix64(std::uint64_t z) noexcept
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream,
                                     std::uint64_t counter) noexcept
{
    return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ counter);
}

//! Uniform double in [0, 1) with 53 random bits.
constexpr double uniform01(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) noexcept
{
    return double(counter_hash(seed, stream, counter) >> 11) * 0x1.0p-53;
}

}  // namespace thinscat
