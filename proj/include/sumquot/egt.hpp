#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "sumquot/rational.hpp"
#include "sumquot/rng.hpp"

namespace sumquot {

// An r-partite graph with k vertices per part.  Parts are independent sets
// by construction: intra-part edges are rejected at insertion.  Vertices
// are addressed as (part, slot).
class MultipartiteGraph {
public:
    MultipartiteGraph(std::size_t parts, std::size_t part_size)
        : r_(parts), k_(part_size), adj_(parts * part_size * parts * part_size, false) {
        require_input(parts >= 1 && part_size >= 1, "graph needs parts of positive size");
    }

    static MultipartiteGraph complete(std::size_t parts, std::size_t part_size) {
        MultipartiteGraph g(parts, part_size);
        for (std::size_t p = 0; p < parts; ++p)
            for (std::size_t q = p + 1; q < parts; ++q)
                for (std::size_t s = 0; s < part_size; ++s)
                    for (std::size_t t = 0; t < part_size; ++t) g.set_edge(p, s, q, t, true);
        return g;
    }

    std::size_t parts() const { return r_; }
    std::size_t part_size() const { return k_; }

    void set_edge(std::size_t p1, std::size_t s1, std::size_t p2, std::size_t s2,
                  bool present) {
        check(p1, s1);
        check(p2, s2);
        require_input(p1 != p2, "edges inside a part are not allowed");
        adj_[idx(p1, s1) * r_ * k_ + idx(p2, s2)] = present;
        adj_[idx(p2, s2) * r_ * k_ + idx(p1, s1)] = present;
    }

    bool has_edge(std::size_t p1, std::size_t s1, std::size_t p2, std::size_t s2) const {
        check(p1, s1);
        check(p2, s2);
        if (p1 == p2) return false;
        return adj_[idx(p1, s1) * r_ * k_ + idx(p2, s2)];
    }

private:
    std::size_t idx(std::size_t p, std::size_t s) const { return p * k_ + s; }
    void check(std::size_t p, std::size_t s) const {
        require_input(p < r_ && s < k_, "vertex out of range");
    }

    std::size_t r_, k_;
    std::vector<bool> adj_;
};

// |E(V_i, V_j)| for distinct parts.
inline std::size_t pair_density(const MultipartiteGraph& g, std::size_t i, std::size_t j) {
    require_input(i != j, "pair density of a part with itself");
    std::size_t count = 0;
    for (std::size_t s = 0; s < g.part_size(); ++s)
        for (std::size_t t = 0; t < g.part_size(); ++t)
            if (g.has_edge(i, s, j, t)) ++count;
    return count;
}

enum class Tristate { False, True, Indeterminate };

namespace detail {

// Rational enclosure of e.  Densities are integers, so for desk-scale k the
// threshold gap (width under 1e-9 * k^2) never contains one, but the
// indeterminate outcome stays representable rather than being decided by a
// float.
inline const Rational& euler_lo() {
    static const Rational v(Int(2718281828), Int(1000000000));
    return v;
}
inline const Rational& euler_hi() {
    static const Rational v(Int(2718281829), Int(1000000000));
    return v;
}

// Decides density > k^2 (1 - 1/(e (2r-3))) with the enclosure.
inline Tristate exceeds_density_threshold(std::size_t density, std::size_t k,
                                          std::size_t r) {
    Rational k2{Int(Int(k) * Int(k))};
    Rational m{Int(2 * r - 3)};
    Rational thr_lo = k2 * (Rational(1) - Rational(1) / (euler_lo() * m));
    Rational thr_hi = k2 * (Rational(1) - Rational(1) / (euler_hi() * m));
    Rational d{Int(density)};
    if (d > thr_hi) return Tristate::True;
    if (d <= thr_lo) return Tristate::False;
    return Tristate::Indeterminate;
}

} // namespace detail

// The density condition under which a transversal clique is guaranteed:
// every pair density strictly exceeds k^2 (1 - 1/(e (2r-3))).  Never
// silently true: an enclosure-ambiguous density yields Indeterminate.
inline Tristate egt_condition(const MultipartiteGraph& g) {
    require_input(g.parts() >= 2, "density condition needs at least two parts");
    bool ambiguous = false;
    for (std::size_t i = 0; i < g.parts(); ++i)
        for (std::size_t j = i + 1; j < g.parts(); ++j) {
            switch (detail::exceeds_density_threshold(pair_density(g, i, j),
                                                      g.part_size(), g.parts())) {
            case Tristate::False: return Tristate::False;
            case Tristate::Indeterminate: ambiguous = true; break;
            case Tristate::True: break;
            }
        }
    return ambiguous ? Tristate::Indeterminate : Tristate::True;
}

// One vertex per part, pairwise adjacent.
struct CliqueCertificate {
    std::vector<std::size_t> picks; // slot chosen in each part
};

inline bool verify_clique(const MultipartiteGraph& g, const CliqueCertificate& cert) {
    if (cert.picks.size() != g.parts()) return false;
    for (std::size_t p = 0; p < g.parts(); ++p) {
        if (cert.picks[p] >= g.part_size()) return false;
        for (std::size_t q = p + 1; q < g.parts(); ++q)
            if (!g.has_edge(p, cert.picks[p], q, cert.picks[q])) return false;
    }
    return true;
}

// Repeats the uniform random transversal experiment up to max_tries times
// and returns the first transversal that is a clique.  Deterministic for a
// fixed seed; an empty result is a valid outcome.
inline std::optional<CliqueCertificate> sample_transversal_clique(
    const MultipartiteGraph& g, std::uint64_t seed, std::size_t max_tries) {
    Rng rng(seed);
    std::vector<std::size_t> picks(g.parts());
    for (std::size_t t = 0; t < max_tries; ++t) {
        for (auto& s : picks) s = rng.below(g.part_size());
        bool ok = true;
        for (std::size_t p = 0; p < g.parts() && ok; ++p)
            for (std::size_t q = p + 1; q < g.parts(); ++q)
                if (!g.has_edge(p, picks[p], q, picks[q])) {
                    ok = false;
                    break;
                }
        if (ok) return CliqueCertificate{picks};
    }
    return std::nullopt;
}

// Exact decision procedure: exhaustive part-by-part backtracking with
// domain pruning.  Returns a transversal clique iff one exists.
inline std::optional<CliqueCertificate> backtrack_transversal_clique(
    const MultipartiteGraph& g) {
    const std::size_t r = g.parts(), k = g.part_size();
    std::vector<std::vector<std::size_t>> candidates(r);
    for (std::size_t p = 0; p < r; ++p) {
        candidates[p].resize(k);
        std::iota(candidates[p].begin(), candidates[p].end(), 0);
    }
    // Prune to a fixpoint: a vertex is viable only if it has a neighbor in
    // every other part's surviving candidates.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t p = 0; p < r; ++p) {
            auto& cand = candidates[p];
            for (std::size_t idx = 0; idx < cand.size();) {
                bool viable = true;
                for (std::size_t q = 0; q < r && viable; ++q) {
                    if (q == p) continue;
                    bool any = false;
                    for (auto t : candidates[q])
                        if (g.has_edge(p, cand[idx], q, t)) {
                            any = true;
                            break;
                        }
                    viable = any;
                }
                if (!viable) {
                    cand.erase(cand.begin() + (long)idx);
                    changed = true;
                } else {
                    ++idx;
                }
            }
            if (cand.empty()) return std::nullopt;
        }
    }
    // Search scarcest parts first.
    std::vector<std::size_t> order(r);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (candidates[a].size() != candidates[b].size())
            return candidates[a].size() < candidates[b].size();
        return a < b;
    });

    std::vector<std::size_t> picks(r);
    std::vector<bool> picked(r, false);
    auto dfs = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == r) return true;
        std::size_t p = order[depth];
        for (auto s : candidates[p]) {
            bool ok = true;
            for (std::size_t d = 0; d < depth && ok; ++d)
                ok = g.has_edge(order[d], picks[order[d]], p, s);
            if (!ok) continue;
            picks[p] = s;
            picked[p] = true;
            if (self(self, depth + 1)) return true;
            picked[p] = false;
        }
        return false;
    };
    if (!dfs(dfs, 0)) return std::nullopt;
    return CliqueCertificate{picks};
}

// The complete r-partite graph with the block deletion pattern that meets
// density k^2 (1 - 1/(r-1)) on the modified pairs yet has no transversal
// clique: the t-th block of k/(r-1) vertices of part 0 loses all its edges
// to part t.
inline MultipartiteGraph tightness_construction(std::size_t r, std::size_t k) {
    require_input(r >= 2, "construction needs at least two parts");
    require_input(k % (r - 1) == 0, "part size must be divisible by r-1");
    MultipartiteGraph g = MultipartiteGraph::complete(r, k);
    const std::size_t block = k / (r - 1);
    for (std::size_t t = 1; t < r; ++t)
        for (std::size_t s = (t - 1) * block; s < t * block; ++s)
            for (std::size_t u = 0; u < k; ++u) g.set_edge(0, s, t, u, false);
    return g;
}

} // namespace sumquot
