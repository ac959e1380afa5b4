#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace fce {

using Rng = std::mt19937_64;

/// splitmix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t combine_seeds(std::initializer_list<std::uint64_t> parts) {
    std::uint64_t h = 0x243f6a8885a308d3ULL;
    for (const std::uint64_t p : parts) h = mix64(h ^ mix64(p));
    return h;
}

/// 64-bit FNV-1a.
constexpr std::uint64_t hash_string(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Independent generator for one candidate of one generation. Serial and
/// parallel evaluation draw from identical streams.
inline Rng substream(std::uint64_t seed, std::uint64_t generation, std::uint64_t index) {
    return Rng(combine_seeds({seed, generation, index}));
}

}  // namespace fce
