#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace v2xsec {

using Rng = std::mt19937_64;

/// splitmix64 finalizer; used to turn structured indices into well-mixed seeds.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Folds a list of indices into a master seed. Order matters.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) noexcept
{
    std::uint64_t s = mix64(master);
    for (auto p : path) {
        s = mix64(s ^ mix64(p + 0x632be59bd9b4e019ULL));
    }
    return s;
}

/// Random stream for one realization: a pure function of (seed, index).
inline Rng stream_for(std::uint64_t seed, std::uint64_t index)
{
    return Rng{derive_seed(seed, {index})};
}

}  // namespace v2xsec
