#pragma once

#include <cstdint>
#include <random>

#include "sumquot/errors.hpp"

namespace sumquot {

// Deterministic pseudorandom stream from a 64-bit seed.  Bounded draws use
// mask-and-reject so every value below the bound is equally likely; no
// modulo bias, and no dependence on implementation-defined distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform draw from {0, ..., bound-1}.
    std::uint64_t below(std::uint64_t bound) {
        require_input(bound >= 1, "uniform draw from empty range");
        if (bound == 1) return 0;
        std::uint64_t mask = ~std::uint64_t(0);
        // Smallest all-ones mask covering bound-1.
        std::uint64_t top = bound - 1;
        mask = top;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        for (;;) {
            std::uint64_t v = gen_() & mask;
            if (v < bound) return v;
        }
    }

private:
    std::mt19937_64 gen_;
};

} // namespace sumquot
