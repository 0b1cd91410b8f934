#pragma once

// Reproducible randomness: SplitMix64 (Steele, Lea and Flood), used both as
// a sequential generator and as a counter-based hash for per-trial seeds.

#include "jetlct/polynomial.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace jetlct {

inline std::uint64_t splitmix64_mix(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class SplitMix64 {
public:
    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        state_ += kGamma;
        return splitmix64_mix(state_);
    }

    // Uniform in [lo, hi] by reduction modulo the range width.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi)
    {
        if (hi < lo) {
            throw std::invalid_argument("empty range");
        }
        auto width = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % width);
    }

    // Seed of trial `index` in a run seeded with `seed`: the (index+1)-th
    // output of a generator started at `seed`, computed without stepping.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t index)
    {
        return splitmix64_mix(seed + (index + 1) * kGamma);
    }

private:
    std::uint64_t state_;
};

struct IntRange {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    bool empty() const { return hi < lo; }
};

// Exponent vectors uniform in [0, d]^n, d drawn from degree_range; zero
// vectors are redrawn so the ideal is never the unit ideal.
inline MonomialIdeal random_monomial_ideal(SplitMix64& rng, std::size_t n, IntRange degree_range,
                                           IntRange generator_count)
{
    const auto d = rng.uniform(degree_range.lo, degree_range.hi);
    if (d < 1) {
        throw std::invalid_argument("degree box must allow a nonzero exponent");
    }
    const auto g = rng.uniform(generator_count.lo, generator_count.hi);
    std::vector<Exponents> gens;
    for (std::int64_t k = 0; k < g; ++k) {
        Exponents e(n, 0);
        do {
            for (auto& x : e) {
                x = static_cast<std::uint32_t>(rng.uniform(0, d));
            }
        } while (total_degree(e) == 0);
        gens.push_back(std::move(e));
    }
    return MonomialIdeal(n, std::move(gens));
}

}  // namespace jetlct
