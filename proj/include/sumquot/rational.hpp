#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/functional/hash.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "sumquot/errors.hpp"

namespace sumquot {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar in canonical reduced form: gcd(|num|, den) = 1 and
// den > 0 at all times.  Every value in this library (set elements, slopes,
// curve parameters, coordinates) is one of these; there is no floating-point
// fallback anywhere on a certifying path.
class Rational {
public:
    Rational() = default;
    Rational(int v) : v_(v) {}                    // NOLINT: implicit by design
    Rational(long long v) : v_((std::int64_t)v) {}
    explicit Rational(const Int& v) : v_(v) {}

    // Canonicalizing constructor; den == 0 is a rejected input.
    Rational(const Int& num, const Int& den) {
        require_input(den != 0, "rational with zero denominator");
        v_ = boost::multiprecision::cpp_rational(num, den);
    }

    const Int num() const { return boost::multiprecision::numerator(v_); }
    const Int den() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return den() == 1; }
    bool positive() const { return v_ > 0; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    Rational operator-() const { return Rational(cpp_rat(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        require_input(!o.is_zero(), "division by zero rational");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // "p/q", or just "p" for integers.
    std::string str() const {
        std::string s = num().str();
        if (den() != 1) s += "/" + den().str();
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

    std::size_t hash() const {
        std::size_t h = boost::hash<boost::multiprecision::cpp_rational>{}(v_);
        return h;
    }

private:
    using cpp_rat = boost::multiprecision::cpp_rational;
    explicit Rational(cpp_rat v) : v_(std::move(v)) {}
    cpp_rat v_;
};

inline Rational make_rational(const Int& num, const Int& den) {
    return Rational(num, den);
}

inline Rational rat_abs(const Rational& r) { return r < 0 ? -r : r; }

// Parses "p", "-p", "p/q" with optional surrounding whitespace already
// stripped by the caller.  Rejects everything else.
inline Rational parse_rational(std::string_view tok) {
    require_input(!tok.empty(), "empty rational token");
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto slash = tok.find('/');
    if (slash == std::string_view::npos) {
        require_input(is_int(tok), "malformed rational '" + std::string(tok) + "'");
        return Rational(Int(std::string(tok)));
    }
    auto ns = tok.substr(0, slash);
    auto ds = tok.substr(slash + 1);
    require_input(is_int(ns) && is_int(ds),
                  "malformed rational '" + std::string(tok) + "'");
    Int den{std::string(ds)};
    require_input(den != 0, "zero denominator in '" + std::string(tok) + "'");
    return Rational(Int(std::string(ns)), den);
}

// Fixed-point decimal rendering with `digits` fractional places, rounding
// half away from zero.  Used for measured (non-certifying) report fields.
inline std::string decimal_string(const Rational& r, unsigned digits = 6) {
    Int scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    Int num = Int(r.num() * scale * 2 + (r.sign() >= 0 ? r.den() : Int(-r.den())));
    Int q = Int(num / (r.den() * 2)); // truncates toward zero => round-half-away
    bool neg = q < 0;
    Int aq = neg ? Int(-q) : q;
    std::string body = Int(aq / scale).str();
    std::string frac = Int(aq % scale).str();
    frac.insert(frac.begin(), digits - frac.size(), '0');
    std::string out = (neg ? "-" : "") + body;
    if (digits > 0) out += "." + frac;
    return out;
}

// A point of the plane with exact rational coordinates.
struct RatPoint {
    Rational x, y;

    friend bool operator==(const RatPoint& a, const RatPoint& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const RatPoint& a, const RatPoint& b) { return !(a == b); }
    friend bool operator<(const RatPoint& a, const RatPoint& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

// Slope of the line from the origin through p; first coordinate must be
// nonzero.
inline Rational slope(const RatPoint& p) {
    require_input(!p.x.is_zero(), "slope of point with zero first coordinate");
    return p.y / p.x;
}

// Slope of p+q as seen from the origin.
inline Rational slope_of_sum(const RatPoint& p, const RatPoint& q) {
    Rational x = p.x + q.x;
    require_input(!x.is_zero(), "undefined slope: sum has zero first coordinate");
    return (p.y + q.y) / x;
}

} // namespace sumquot

template <>
struct std::hash<sumquot::Rational> {
    std::size_t operator()(const sumquot::Rational& r) const { return r.hash(); }
};
