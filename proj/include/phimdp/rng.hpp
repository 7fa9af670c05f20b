#ifndef PHIMDP_RNG_HPP
#define PHIMDP_RNG_HPP

#include <cstdint>
#include <random>

namespace phimdp {

// Portable draws on top of mt19937_64. std::uniform_*_distribution is
// implementation-defined, so golden logs would not survive a standard
// library change; these helpers pin the exact bit usage.

inline double uniform01(std::mt19937_64& g) {
    // 53 random bits in [0, 1)
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline std::size_t uniform_index(std::mt19937_64& g, std::size_t n) {
    // modulo bias is below 2^-50 for the desk-scale n used here
    return static_cast<std::size_t>(g() % n);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 step, used to derive independent sub-streams from one seed
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace phimdp

#endif
