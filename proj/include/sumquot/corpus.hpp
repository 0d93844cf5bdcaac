#pragma once

#include <cstdint>
#include <vector>

#include "sumquot/ratset.hpp"
#include "sumquot/rng.hpp"

namespace sumquot {

// Deterministic test-set families.

// start, start+step, ..., start+(n-1)step
inline RatSet corpus_ap(const Rational& start, const Rational& step, std::size_t n) {
    require_input(n >= 1, "corpus size must be positive");
    require_input(step > 0, "progression step must be positive");
    std::vector<Rational> v;
    v.reserve(n);
    Rational x = start;
    for (std::size_t i = 0; i < n; ++i, x += step) v.push_back(x);
    return RatSet(std::move(v));
}

// start, start*ratio, ..., start*ratio^(n-1)
inline RatSet corpus_gp(const Rational& start, const Rational& ratio, std::size_t n) {
    require_input(n >= 1, "corpus size must be positive");
    require_input(ratio > 0, "progression ratio must be positive");
    require_input(!start.is_zero(), "progression start must be nonzero");
    std::vector<Rational> v;
    v.reserve(n);
    Rational x = start;
    for (std::size_t i = 0; i < n; ++i, x *= ratio) v.push_back(x);
    RatSet out(std::move(v));
    require_input(out.size() == n, "progression elements are not distinct");
    return out;
}

// n distinct uniform draws from {1, ..., range}.
inline RatSet corpus_random(std::size_t n, std::uint64_t seed, std::uint64_t range) {
    require_input(n >= 1, "corpus size must be positive");
    require_input(range >= n, "range too small for distinct draws");
    Rng rng(seed);
    std::vector<Rational> v;
    while (v.size() < n) {
        Rational x{Int(rng.below(range) + 1)};
        bool dup = false;
        for (const auto& y : v)
            if (y == x) { dup = true; break; }
        if (!dup) v.push_back(x);
    }
    return RatSet(std::move(v));
}

} // namespace sumquot
