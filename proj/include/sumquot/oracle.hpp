#pragma once

#include <cstddef>
#include <thread>
#include <vector>

#include "sumquot/intpow.hpp"
#include "sumquot/ratset.hpp"

namespace sumquot {

// Exact quotient set {(a+b)/(c+d) : a,b,c,d in A, c+d != 0}, enumerated as
// ratios of the sumset S = A+A with itself -- the same set as the quadruple
// definition but O(|S|^2) instead of O(|A|^4).
//
// `threads` partitions the numerator rows; the result is a set, so it does
// not depend on the partition.
inline RatSet quotient_of_sums(const RatSet& a, unsigned threads = 1) {
    RatSet s = sumset(a, a);
    const auto& v = s.elements();
    if (threads <= 1 || v.size() < 64) {
        std::vector<Rational> out;
        out.reserve(v.size() * v.size());
        for (const auto& p : v)
            for (const auto& q : v)
                if (!q.is_zero()) out.push_back(p / q);
        return RatSet(std::move(out));
    }
    std::vector<std::vector<Rational>> parts(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            auto& local = parts[t];
            for (std::size_t i = t; i < v.size(); i += threads)
                for (const auto& q : v)
                    if (!q.is_zero()) local.push_back(v[i] / q);
        });
    }
    for (auto& th : pool) th.join();
    std::vector<Rational> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return RatSet(std::move(out));
}

// Measured comparison of a set against the library's reference bounds.
// `main1_ratio` is a measurement only (the reference inequality has an
// unspecified constant); `antal_ok` is a theorem for positive sets and is
// re-verified, never assumed.
struct QuotientReport {
    std::size_t n = 0;
    std::size_t quotient_size = 0;
    std::size_t ratio_set_size = 0;
    bool antal_ok = false;     // quotient_size >= 2 n^2 - 1
    Rational main1_ratio;      // quotient_size * |A:A|^(1/25) * ceil(log2 n) / (n^2 * (n^2)^(1/25))
};

inline QuotientReport bound_report(const RatSet& a, unsigned threads = 1) {
    require_input(!a.empty(), "bound report of empty set");
    require_input(a.all_positive(), "bound report requires strictly positive elements");
    QuotientReport r;
    r.n = a.size();
    r.quotient_size = quotient_of_sums(a, threads).size();
    r.ratio_set_size = ratio_set(a).size();
    r.antal_ok = r.quotient_size >= 2 * r.n * r.n - 1;
    // 25th roots taken as integer floors; log base 2 rounded up.  All are
    // deterministic stand-ins for the real-valued quantities.
    Int root_ratio = iroot_floor(Int(r.ratio_set_size), 25);
    Int root_n2 = iroot_floor(Int(r.n) * Int(r.n), 25);
    unsigned lg = r.n > 1 ? ceil_log2(r.n) : 1;
    r.main1_ratio = Rational(Int(Int(r.quotient_size) * root_ratio * lg),
                             Int(Int(r.n) * Int(r.n) * root_n2));
    return r;
}

} // namespace sumquot
