// rng.hpp — Deterministic random source for graph generators.
//
// std::mt19937_64 produces the same stream on every conforming platform, but the
// standard <random> distributions do not. The wrappers here derive uniform doubles
// and bounded ints directly from the raw stream so that a (generator, seed) pair
// always yields the same graph, regardless of compiler or libc.
#pragma once

#include <cstdint>
#include <random>

namespace rolesim {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, 1) with 53 bits of precision.
    double uniform() {
        return static_cast<double>(eng_() >> 11) * (1.0 / 9007199254740992.0);
    }

    // Uniform integer in [0, bound); rejection sampling avoids modulo bias.
    // bound must be >= 1.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace rolesim
