#pragma once

#include <cstdint>

#include "sumquot/rational.hpp"

namespace sumquot {

inline Int ipow(Int base, unsigned exp) {
    Int r = 1;
    while (exp) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

inline Rational rat_pow(const Rational& base, unsigned exp) {
    return Rational(ipow(base.num(), exp), ipow(base.den(), exp));
}

// Largest r >= 0 with r^n <= x (x >= 0, n >= 1), by binary search on the
// bit length of the root.
inline Int iroot_floor(const Int& x, unsigned n) {
    require_input(n >= 1, "iroot_floor: zero root index");
    require_input(x >= 0, "iroot_floor: negative radicand");
    if (x == 0 || x == 1 || n == 1) return x;
    std::size_t bits = boost::multiprecision::msb(x) + 1;
    Int hi = Int(1) << (bits / n + 1);
    Int lo = 0;
    while (lo < hi) { // invariant: lo^n <= x < (hi+1)^n
        Int mid = (lo + hi + 1) / 2;
        if (ipow(mid, n) <= x)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

inline bool is_perfect_power(const Int& x, unsigned n) {
    if (x < 0) return false;
    Int r = iroot_floor(x, n);
    return ipow(r, n) == x;
}

// floor(c * x^(1/k)) for rational c = p/q >= 0 and integer x >= 0, computed
// exactly: m is the answer iff (m q)^k <= p^k x < ((m+1) q)^k.
inline Int floor_const_times_root(const Rational& c, const Int& x, unsigned k) {
    require_input(c >= 0 && x >= 0, "floor_const_times_root: negative input");
    Int pk = ipow(c.num(), k) * x;
    Int qk = ipow(c.den(), k);
    return iroot_floor(pk / qk, k);
}

// ceil(log2(n)) for n >= 1.
inline unsigned ceil_log2(std::uint64_t n) {
    require_input(n >= 1, "ceil_log2: zero argument");
    unsigned b = 0;
    while ((std::uint64_t(1) << b) < n) ++b;
    return b;
}

// Exact rational square root: succeeds iff num and den of the canonical
// form are both perfect squares.
inline bool rat_sqrt_exact(const Rational& r, Rational& out) {
    if (r < 0) return false;
    Int sn = iroot_floor(r.num(), 2);
    Int sd = iroot_floor(r.den(), 2);
    if (sn * sn != r.num() || sd * sd != r.den()) return false;
    out = Rational(sn, sd);
    return true;
}

} // namespace sumquot
