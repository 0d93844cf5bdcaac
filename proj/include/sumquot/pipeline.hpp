#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "sumquot/curves.hpp"
#include "sumquot/egt.hpp"
#include "sumquot/intpow.hpp"
#include "sumquot/oracle.hpp"
#include "sumquot/slopes.hpp"

namespace sumquot {

// ---------------------------------------------------------------------------
// Witness-producing machinery.  Two certifiers emit sets of distinct slopes
// verifiably contained in (A+A)/(A+A), so their cardinality is a sound lower
// bound for the quotient set:
//
//   certify_born      sums a fixed point on each slope line with the whole
//                     next line; exactly |A|^2 - 1 witnesses.
//   certify_full      the clustered construction: dyadic slope selection,
//                     cluster split T/U, a technical point filter, a good-pair
//                     graph whose transversal cliques pick representatives,
//                     and exact per-cluster accounting of the overcount.
//
// Every count is produced by exact enumeration; the asymptotic parameter
// conditions are evaluated and *reported*, never relied on for soundness.
// ---------------------------------------------------------------------------

// The set of slopes R((a0, l0*a0) + points of the lam-line), enumerated
// exactly.  When lam != l0 the slope is strictly monotone in x, so the set
// has one element per line point.
inline RatSet shifted_slope_set(const Rational& l0, const Rational& a0,
                                const Rational& lam, const RatSet& line) {
    std::vector<Rational> out;
    out.reserve(line.size());
    for (const auto& x : line) out.push_back((l0 * a0 + lam * x) / (a0 + x));
    return RatSet(std::move(out));
}

// --- dyadic pigeonholing ---------------------------------------------------

struct PigeonholeSelection {
    std::size_t tau = 0;        // minimum line size over the selected bucket
    RatSet S;                   // slopes of the selected bucket, ascending
    std::size_t bucket_index = 0;
    std::size_t mass = 0;       // sum of |A_lam| over S
};

// Buckets line sizes into [2^(j-1) t0, 2^j t0) with t0 = n^2 / (2 |A:A|)
// and returns the bucket of maximal mass (ties to the smallest index).
// tau is the bucket minimum, which makes tau <= |A_lam| < 2 tau exact.
inline PigeonholeSelection dyadic_select(const SlopeDecomposition& d) {
    require_input(d.n >= 2, "dyadic selection needs at least two elements");
    const Int n2 = Int(d.n) * Int(d.n);
    const Rational t0(n2, Int(2) * Int(d.lines.size()));

    std::size_t max_size = 0;
    for (const auto& [lam, line] : d.lines) max_size = std::max(max_size, line.size());

    PigeonholeSelection best;
    bool found = false;
    Rational start = t0;
    for (std::size_t j = 1; start <= Rational(Int(max_size)); ++j, start *= 2) {
        Rational end = start * 2;
        std::vector<Rational> slopes;
        std::size_t mass = 0;
        for (const auto& [lam, line] : d.lines) {
            Rational sz{Int(line.size())};
            if (start <= sz && sz < end) {
                slopes.push_back(lam);
                mass += line.size();
            }
        }
        if (!slopes.empty() && (!found || mass > best.mass)) {
            best.S = RatSet(std::move(slopes));
            best.mass = mass;
            best.bucket_index = j;
            found = true;
        }
    }
    require_invariant(found, "no nonempty dyadic bucket");

    std::size_t tau = max_size;
    for (const auto& lam : best.S) tau = std::min(tau, d.line(lam).size());
    best.tau = tau;

    // Exact re-checks of the selection guarantees.
    for (const auto& lam : best.S) {
        std::size_t sz = d.line(lam).size();
        require_invariant(tau <= sz && sz < 2 * tau, "bucket is not a dyadic band");
    }
    require_invariant(Rational(Int(tau)) >= t0, "tau below the pigeonhole floor");
    unsigned lg = ceil_log2(d.n);
    require_invariant(Rational(Int(Int(tau) * Int(best.S.size()))) >=
                          Rational(n2, Int(4) * Int(lg + 1)),
                      "selected bucket carries too little mass");
    return best;
}

// --- parameter choice and the regime ledger --------------------------------

enum class ConditionStatus { Ok, Violated, NotEvaluable };

struct ConditionOutcome {
    std::string id;
    ConditionStatus status;
};

struct RegimeReport {
    std::vector<ConditionOutcome> conditions;
    bool regime_ok = false; // every condition evaluated and satisfied

    ConditionStatus status(const std::string& id) const {
        for (const auto& c : conditions)
            if (c.id == id) return c.status;
        throw input_error("unknown condition id " + id);
    }
};

struct ParameterChoice {
    std::size_t M = 0, N = 0;         // actual values (overrides applied)
    std::size_t derived_M = 0, derived_N = 0;
    Rational c_M, c_N;
    RegimeReport regime;
};

// M = floor(c_M tau^(1/5)), N = floor(c_N tau^(1/25)) via exact integer
// root extraction, plus the ledger of parameter conditions.  Conditions
// involving the unspecified absolute constants are NotEvaluable unless the
// caller supplies values for them.  Violations are data, not errors.
inline ParameterChoice choose_parameters(std::size_t tau, const Rational& c_M,
                                         const Rational& c_N, std::size_t S_size,
                                         std::optional<Rational> C = std::nullopt,
                                         std::optional<Rational> C_prime = std::nullopt,
                                         std::optional<std::size_t> override_M = std::nullopt,
                                         std::optional<std::size_t> override_N = std::nullopt) {
    require_input(tau >= 1, "parameter choice needs tau >= 1");
    require_input(c_M > 0 && c_N > 0, "parameter constants must be positive");

    ParameterChoice out;
    out.c_M = c_M;
    out.c_N = c_N;
    out.derived_M = floor_const_times_root(c_M, Int(tau), 5).convert_to<std::size_t>();
    out.derived_N = floor_const_times_root(c_N, Int(tau), 25).convert_to<std::size_t>();
    out.M = override_M.value_or(out.derived_M);
    out.N = override_N.value_or(out.derived_N);

    auto push = [&](const std::string& id, ConditionStatus st) {
        out.regime.conditions.push_back({id, st});
    };
    auto from_bool = [](bool ok) {
        return ok ? ConditionStatus::Ok : ConditionStatus::Violated;
    };

    push("req1", from_bool(out.N >= 1 && out.N <= out.M && 2 * out.M <= S_size));
    push("1", from_bool(c_M <= Rational(1, 2)));
    push("2", from_bool(c_N <= Rational(1, 16)));
    if (C_prime) {
        // 4 e C' c_M c_N^2 <= 1, decided with the rational enclosure of e.
        Rational base = Rational(4) * *C_prime * c_M * c_N * c_N;
        Rational lo = base * detail::euler_lo();
        Rational hi = base * detail::euler_hi();
        if (hi <= 1)
            push("3", ConditionStatus::Ok);
        else if (lo > 1)
            push("3", ConditionStatus::Violated);
        else
            push("3", ConditionStatus::NotEvaluable);
    } else {
        push("3", ConditionStatus::NotEvaluable);
    }
    if (C) {
        require_input(*C > 0, "constant C must be positive");
        push("4", from_bool(c_N * c_N <= c_M / (Rational(4) * *C)));
    } else {
        push("4", ConditionStatus::NotEvaluable);
    }
    // c_M tau^(1/5) >= c_N tau^(1/25)  <=>  c_M^25 tau^5 >= c_N^25 tau
    Rational cm25 = rat_pow(c_M, 25), cn25 = rat_pow(c_N, 25);
    Rational tau1{Int(tau)};
    push("5", from_bool(cm25 * rat_pow(tau1, 5) >= cn25 * tau1));
    // c_N tau^(1/25) >= 1  <=>  c_N^25 tau >= 1
    push("7", from_bool(cn25 * tau1 >= 1));
    // c_M tau^(1/5) <= |S|/2  <=>  c_M^25 tau^5 <= (|S|/2)^25
    push("8", from_bool(cm25 * rat_pow(tau1, 5) <=
                        rat_pow(Rational(Int(S_size), 2), 25)));

    out.regime.regime_ok = true;
    for (const auto& c : out.regime.conditions)
        if (c.status != ConditionStatus::Ok) out.regime.regime_ok = false;
    return out;
}

// --- clusters ---------------------------------------------------------------

struct Cluster {
    std::vector<Rational> T; // the M smallest slopes, ascending
    std::vector<Rational> U; // the N largest slopes, ascending
    Rational lo, hi;         // slope band of the whole cluster
};

struct ClusterPlan {
    std::size_t M = 0, N = 0;
    std::vector<Cluster> clusters;
};

// Consecutive runs of M+N slopes from S in ascending order; leftover slopes
// beyond the last full cluster are dropped.
inline ClusterPlan build_clusters(const PigeonholeSelection& sel, std::size_t M,
                                  std::size_t N) {
    require_input(M >= 1 && N >= 1, "cluster split needs M >= 1 and N >= 1");
    require_input(M + N <= sel.S.size(), "cluster size exceeds the slope count");
    ClusterPlan plan;
    plan.M = M;
    plan.N = N;
    const std::size_t width = M + N;
    const std::size_t count = sel.S.size() / width;
    for (std::size_t c = 0; c < count; ++c) {
        Cluster cl;
        for (std::size_t i = 0; i < M; ++i) cl.T.push_back(sel.S[c * width + i]);
        for (std::size_t i = M; i < width; ++i) cl.U.push_back(sel.S[c * width + i]);
        cl.lo = cl.T.front();
        cl.hi = cl.U.back();
        plan.clusters.push_back(std::move(cl));
    }
    return plan;
}

// --- the technical point filter ---------------------------------------------

inline std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

struct TechnicalSubset {
    bool refined = false;                 // enough surviving lines?
    std::size_t p_size = 0;               // |P_j|
    std::map<Rational, RatSet> survivors; // lam in T -> surviving x's
    std::vector<Rational> T_pp;           // shallowest ceil(M/8) surviving lines
    std::map<Rational, RatSet> lines_pp;  // lam in T_pp -> first ceil(tau/4) survivors
    Rational measured_C;                  // deficit measure, 0 when |P_j| >= tau M
};

// Keeps the points of the T-lines whose slope-coincidence count r against
// every ordered distinct pair from U satisfies r^25 <= tau^24 (the exact
// integer form of r <= tau^(1-1/25)).  Then keeps lines with at least
// ceil(tau/4) survivors and trims each to its nearest-origin ceil(tau/4)
// points.  With |U| = 1 the filter is vacuous.
inline TechnicalSubset technical_filter(const Cluster& cluster,
                                        const SlopeDecomposition& d,
                                        std::size_t tau) {
    require_input(tau >= 1, "technical filter needs tau >= 1");
    const std::size_t M = cluster.T.size(), N = cluster.U.size();
    const Int tau24 = ipow(Int(tau), 24);

    TechnicalSubset out;
    for (const auto& lam : cluster.T) {
        std::vector<Rational> kept;
        for (const auto& a : d.line(lam)) {
            // Slope sets of (a, lam a) + each U-line; each is duplicate-free.
            std::vector<RatSet> shifted;
            shifted.reserve(N);
            for (const auto& u : cluster.U)
                shifted.push_back(shifted_slope_set(lam, a, u, d.line(u)));
            bool ok = true;
            for (std::size_t i = 0; i < N && ok; ++i)
                for (std::size_t j = 0; j < N && ok; ++j) {
                    if (i == j) continue;
                    std::size_t r = intersection_size(shifted[i], shifted[j]);
                    if (ipow(Int(r), 25) > tau24) ok = false;
                }
            if (ok) kept.push_back(a);
        }
        out.p_size += kept.size();
        out.survivors.emplace(lam, RatSet(std::move(kept)));
    }

    const std::size_t need_points = ceil_div(tau, 4);
    const std::size_t need_lines = ceil_div(M, 8);
    std::vector<Rational> t_prime;
    for (const auto& lam : cluster.T) // ascending, so "shallowest first"
        if (out.survivors.at(lam).size() >= need_points) t_prime.push_back(lam);

    out.refined = t_prime.size() >= need_lines;
    if (out.refined) {
        out.T_pp.assign(t_prime.begin(), t_prime.begin() + (long)need_lines);
        for (const auto& lam : out.T_pp) {
            const auto& surv = out.survivors.at(lam);
            std::vector<Rational> first(surv.begin(), surv.begin() + (long)need_points);
            out.lines_pp.emplace(lam, RatSet(std::move(first)));
        }
    }

    // Measured analogue of the absolute constant in the filter's size
    // guarantee |P_j| >= tau M - C N^2 tau^(28/25); reported, not asserted.
    if (out.p_size < tau * M && N >= 1) {
        Int deficit = Int(tau * M - out.p_size);
        Int denom = Int(N) * Int(N) * iroot_floor(ipow(Int(tau), 28), 25);
        out.measured_C = Rational(deficit, denom);
    }
    return out;
}

// --- the good-pair graph ----------------------------------------------------

// Multipartite graph over the refined lines: part = line of T_pp, slot =
// one of its ceil(tau/4) nearest-origin surviving points.  Two points on
// distinct lines are adjacent iff for every ordered (u1, u2) in U x U the
// exact coincidence count c satisfies c^25 <= tau^19.
struct GoodPairGraph {
    MultipartiteGraph graph{1, 1};
    std::vector<Rational> part_slopes;        // lam per part, ascending
    std::vector<std::vector<Rational>> slots; // x per (part, slot), ascending
};

inline GoodPairGraph build_good_pair_graph(const TechnicalSubset& ts,
                                           const std::vector<Rational>& U,
                                           const SlopeDecomposition& d,
                                           std::size_t tau) {
    require_input(ts.refined, "good-pair graph needs a refined technical subset");
    const std::size_t r = ts.T_pp.size();
    const std::size_t k = ceil_div(tau, 4);
    const Int tau19 = ipow(Int(tau), 19);

    GoodPairGraph g;
    g.graph = MultipartiteGraph(r, k);
    g.part_slopes = ts.T_pp;
    g.slots.resize(r);
    for (std::size_t p = 0; p < r; ++p) {
        const auto& pts = ts.lines_pp.at(ts.T_pp[p]);
        require_invariant(pts.size() == k, "refined line with wrong point count");
        g.slots[p].assign(pts.begin(), pts.end());
    }

    // Slope sets of every vertex against every U-line, computed once.
    std::vector<std::vector<std::vector<RatSet>>> shifted(r);
    for (std::size_t p = 0; p < r; ++p) {
        shifted[p].resize(k);
        for (std::size_t s = 0; s < k; ++s) {
            shifted[p][s].reserve(U.size());
            for (const auto& u : U)
                shifted[p][s].push_back(
                    shifted_slope_set(g.part_slopes[p], g.slots[p][s], u, d.line(u)));
        }
    }

    for (std::size_t p = 0; p < r; ++p)
        for (std::size_t q = p + 1; q < r; ++q)
            for (std::size_t s = 0; s < k; ++s)
                for (std::size_t t = 0; t < k; ++t) {
                    bool good = true;
                    for (std::size_t i = 0; i < U.size() && good; ++i)
                        for (std::size_t j = 0; j < U.size() && good; ++j) {
                            std::size_t c =
                                intersection_size(shifted[p][s][i], shifted[q][t][j]);
                            if (ipow(Int(c), 25) > tau19) good = false;
                        }
                    if (good) g.graph.set_edge(p, s, q, t, true);
                }
    return g;
}

// --- representatives and the error term --------------------------------------

struct Representatives {
    std::map<Rational, Rational> rep_x; // line slope -> chosen x
    std::string method;                 // "clique" or "fallback"
};

// Picks one point per refined line.  A transversal clique of the good-pair
// graph (sampler first, then exact backtracking) gives the error guarantee;
// if none exists, falls back to the nearest-origin point of each line,
// which keeps the certified count sound but loses that guarantee.
inline Representatives select_representatives(const GoodPairGraph& g,
                                              std::uint64_t seed) {
    Representatives out;
    std::optional<CliqueCertificate> cert =
        sample_transversal_clique(g.graph, seed, 128);
    if (!cert) cert = backtrack_transversal_clique(g.graph);
    if (cert) {
        require_invariant(verify_clique(g.graph, *cert),
                          "clique certificate failed re-verification");
        out.method = "clique";
        for (std::size_t p = 0; p < g.part_slopes.size(); ++p)
            out.rep_x.emplace(g.part_slopes[p], g.slots[p][cert->picks[p]]);
    } else {
        out.method = "fallback";
        for (std::size_t p = 0; p < g.part_slopes.size(); ++p)
            out.rep_x.emplace(g.part_slopes[p], g.slots[p].front());
    }
    return out;
}

// Exact size of the overlap of two shifted-line slope sets:
//   | R((a3, l3 a3) + line(l1))  intersect  R((a4, l4 a4) + line(l2)) |
// where a3, a4 are the representatives of l3, l4.
inline std::size_t error_term(const Rational& l1, const Rational& l2,
                              const Rational& l3, const Rational& l4,
                              const Representatives& reps,
                              const SlopeDecomposition& d) {
    require_input(!(l1 == l2 && l3 == l4),
                  "error term requires (l1,l3) != (l2,l4)");
    auto it3 = reps.rep_x.find(l3);
    auto it4 = reps.rep_x.find(l4);
    require_input(it3 != reps.rep_x.end() && it4 != reps.rep_x.end(),
                  "missing representative for error term");
    RatSet s1 = shifted_slope_set(l3, it3->second, l1, d.line(l1));
    RatSet s2 = shifted_slope_set(l4, it4->second, l2, d.line(l2));
    return intersection_size(s1, s2);
}

// --- certified bounds ---------------------------------------------------------

struct ClusterAccount {
    std::size_t r_count = 0;    // |R_j'|
    std::size_t main_exact = 0; // sum of |A_lam| over (lam, lam') in U x T_pp
    Rational main_paper;        // M N tau / 8
    std::size_t error_sum = 0;  // sum of error terms over ordered distinct pairs
    Rational band_lo, band_hi;  // open slope band containing the witnesses
    RatSet witnesses;
    std::string rep_method;
};

struct CertifiedBound {
    RatSet witnesses;
    std::vector<ClusterAccount> per_cluster;
    std::string mode; // "full-pipeline" or "born-fallback"
    bool regime_ok = false;
    RegimeReport regime;
    std::size_t tau = 0, S_size = 0, M = 0, N = 0;
};

struct PipelineOverrides {
    std::optional<std::size_t> M, N;
    std::optional<Rational> c_M, c_N, C, C_prime;
    std::uint64_t seed = 0;
};

namespace detail {

// Independent soundness re-check: each witness z must satisfy z = s/t for
// some s, t in A+A.  This goes back to the definition rather than trusting
// the construction path.
inline void verify_witnesses_in_quotient(const RatSet& a, const RatSet& witnesses) {
    RatSet s = sumset(a, a);
    std::unordered_set<Rational> sums(s.begin(), s.end());
    for (const auto& z : witnesses) {
        bool found = false;
        for (const auto& t : s) {
            if (t.is_zero()) continue;
            if (sums.count(z * t)) {
                found = true;
                break;
            }
        }
        require_invariant(found, "witness " + z.str() + " outside the quotient set");
    }
}

} // namespace detail

// The neighbor-line certifier (CLI mode "born"): fix the nearest-origin
// point p_i of each slope line, sum it with every point of the next line,
// and collect the slopes.  They are distinct within a band and the bands
// are disjoint, so the count is exactly |A|^2 - 1.
inline CertifiedBound certify_born(const RatSet& a) {
    require_input(a.all_positive(), "certifier requires strictly positive elements");
    CertifiedBound out;
    out.mode = "born-fallback";
    if (a.size() < 2) return out;

    SlopeDecomposition d = slope_decomposition(a);
    std::vector<Rational> lams = d.slopes(); // ascending
    require_invariant(d.line(lams.front()).size() == 1,
                      "minimal slope line must be a single point");

    std::vector<Rational> all;
    for (std::size_t i = 0; i + 1 < lams.size(); ++i) {
        const Rational& lam = lams[i];
        const Rational& nxt = lams[i + 1];
        const Rational& px = d.line(lam).min(); // nearest the origin
        RatSet band_set = shifted_slope_set(lam, px, nxt, d.line(nxt));
        require_invariant(band_set.size() == d.line(nxt).size(),
                          "shifted slopes collide within a band");
        for (const auto& z : band_set)
            require_invariant(lam < z && z < nxt, "witness escapes its slope band");
        ClusterAccount acc;
        acc.r_count = band_set.size();
        acc.main_exact = d.line(nxt).size();
        acc.main_paper = Rational(Int(acc.main_exact));
        acc.band_lo = lam;
        acc.band_hi = nxt;
        acc.witnesses = band_set;
        acc.rep_method = "nearest-origin";
        out.per_cluster.push_back(std::move(acc));
        all.insert(all.end(), band_set.begin(), band_set.end());
    }
    out.witnesses = RatSet(std::move(all));
    require_invariant(out.witnesses.size() == a.size() * a.size() - 1,
                      "neighbor-line certificate must have |A|^2 - 1 witnesses");
    detail::verify_witnesses_in_quotient(a, out.witnesses);
    return out;
}

// The full clustered certifier.  Falls back to certify_born whenever the
// structural path is infeasible (degenerate parameters, too few slopes, or
// a failed refinement); the regime ledger is reported either way.
inline CertifiedBound certify_full(const RatSet& a,
                                   const PipelineOverrides& ov = {}) {
    require_input(a.all_positive(), "certifier requires strictly positive elements");
    require_input(a.size() >= 2, "certifier needs at least two elements");

    SlopeDecomposition d = slope_decomposition(a);
    PigeonholeSelection sel = dyadic_select(d);
    Rational c_M = ov.c_M.value_or(Rational(1, 2));
    Rational c_N = ov.c_N.value_or(Rational(1, 16));
    ParameterChoice params = choose_parameters(sel.tau, c_M, c_N, sel.S.size(),
                                               ov.C, ov.C_prime, ov.M, ov.N);

    auto fallback = [&]() {
        CertifiedBound out = certify_born(a);
        out.regime = params.regime;
        out.regime_ok = params.regime.regime_ok;
        out.tau = sel.tau;
        out.S_size = sel.S.size();
        out.M = params.M;
        out.N = params.N;
        return out;
    };

    if (params.M < 1 || params.N < 1 || params.M + params.N > sel.S.size())
        return fallback();

    ClusterPlan plan = build_clusters(sel, params.M, params.N);
    const Int tau19 = ipow(Int(sel.tau), 19);
    const Int tau24 = ipow(Int(sel.tau), 24);

    CertifiedBound out;
    out.mode = "full-pipeline";
    out.regime = params.regime;
    out.regime_ok = params.regime.regime_ok;
    out.tau = sel.tau;
    out.S_size = sel.S.size();
    out.M = params.M;
    out.N = params.N;

    std::vector<Rational> all;
    for (const auto& cluster : plan.clusters) {
        TechnicalSubset ts = technical_filter(cluster, d, sel.tau);
        if (!ts.refined) return fallback();
        GoodPairGraph gpg = build_good_pair_graph(ts, cluster.U, d, sel.tau);
        Representatives reps = select_representatives(gpg, ov.seed);

        ClusterAccount acc;
        acc.rep_method = reps.method;
        acc.band_lo = cluster.lo;
        acc.band_hi = cluster.hi;
        acc.main_paper = Rational(Int(Int(params.M) * Int(params.N) * Int(sel.tau)), 8);

        std::vector<Rational> rj;
        for (const auto& u : cluster.U)
            for (const auto& lam : ts.T_pp) {
                RatSet part = shifted_slope_set(lam, reps.rep_x.at(lam), u, d.line(u));
                require_invariant(part.size() == d.line(u).size(),
                                  "shifted slopes collide along a line");
                acc.main_exact += part.size();
                rj.insert(rj.end(), part.begin(), part.end());
            }
        acc.witnesses = RatSet(std::move(rj));
        acc.r_count = acc.witnesses.size();

        // Overcount correction: sum E over ordered distinct pairs
        // ((l1,l3),(l2,l4)) in (U x T_pp)^2.  In clique mode the individual
        // terms obey the exact-power bounds; re-checked, not assumed.
        for (const auto& l1 : cluster.U)
            for (const auto& l3 : ts.T_pp)
                for (const auto& l2 : cluster.U)
                    for (const auto& l4 : ts.T_pp) {
                        if (l1 == l2 && l3 == l4) continue;
                        std::size_t e = error_term(l1, l2, l3, l4, reps, d);
                        if (reps.method == "clique") {
                            if (l3 != l4)
                                require_invariant(ipow(Int(e), 25) <= tau19,
                                                  "cross-line error exceeds its bound");
                            else
                                require_invariant(ipow(Int(e), 25) <= tau24,
                                                  "same-line error exceeds its bound");
                        }
                        acc.error_sum += e;
                    }
        require_invariant(acc.r_count + acc.error_sum >= acc.main_exact,
                          "cluster accounting inequality failed");
        for (const auto& z : acc.witnesses)
            require_invariant(acc.band_lo < z && z < acc.band_hi,
                              "cluster witness escapes its band");
        if (!out.per_cluster.empty())
            require_invariant(out.per_cluster.back().band_hi < acc.band_lo,
                              "cluster bands out of order");
        all.insert(all.end(), acc.witnesses.begin(), acc.witnesses.end());
        out.per_cluster.push_back(std::move(acc));
    }

    out.witnesses = RatSet(std::move(all));
    std::size_t sum_counts = 0;
    for (const auto& acc : out.per_cluster) sum_counts += acc.r_count;
    require_invariant(out.witnesses.size() == sum_counts,
                      "cluster witness sets are not disjoint");
    detail::verify_witnesses_in_quotient(a, out.witnesses);
    return out;
}

} // namespace sumquot
