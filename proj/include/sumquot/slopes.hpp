#pragma once

#include <map>
#include <vector>

#include "sumquot/ratset.hpp"

namespace sumquot {

// Partition of the grid A x A into lines through the origin.  For each
// slope lam, `lines[lam]` is the x-projection of the grid points on that
// line; the line's points are recovered as (x, lam*x).  Requires 0 not in A.
//
// Structural facts maintained by the factory below and re-checked in tests:
//   sum over lam of |lines[lam]| == |A|^2,
//   the key set equals ratio_set(A).
struct SlopeDecomposition {
    std::map<Rational, RatSet> lines; // ascending by slope
    std::size_t n = 0;                // |A|

    const RatSet& line(const Rational& lam) const {
        auto it = lines.find(lam);
        require_input(it != lines.end(), "no line with slope " + lam.str());
        return it->second;
    }

    std::vector<Rational> slopes() const {
        std::vector<Rational> out;
        out.reserve(lines.size());
        for (const auto& [lam, _] : lines) out.push_back(lam);
        return out;
    }
};

inline SlopeDecomposition slope_decomposition(const RatSet& a) {
    require_input(!a.contains_zero(), "slope decomposition requires 0 not in A");
    std::map<Rational, std::vector<Rational>> acc;
    for (const auto& x : a)
        for (const auto& y : a) acc[y / x].push_back(x);
    SlopeDecomposition d;
    d.n = a.size();
    std::size_t total = 0;
    for (auto& [lam, xs] : acc) {
        RatSet line(std::move(xs));
        total += line.size();
        d.lines.emplace(lam, std::move(line));
    }
    require_invariant(total == a.size() * a.size(),
                      "slope decomposition does not partition the grid");
    return d;
}

} // namespace sumquot
