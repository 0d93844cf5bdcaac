#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "sumquot/rational.hpp"

namespace sumquot {

// A finite set of rationals stored as a strictly ascending, duplicate-free
// vector.  Immutable after construction; all set algebra returns new values.
class RatSet {
public:
    RatSet() = default;

    RatSet(std::initializer_list<Rational> init)
        : RatSet(std::vector<Rational>(init)) {}

    explicit RatSet(std::vector<Rational> elems) : v_(std::move(elems)) {
        std::sort(v_.begin(), v_.end());
        v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
    }

    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }

    const Rational& operator[](std::size_t i) const { return v_[i]; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    const Rational& min() const {
        require_input(!v_.empty(), "min of empty set");
        return v_.front();
    }
    const Rational& max() const {
        require_input(!v_.empty(), "max of empty set");
        return v_.back();
    }

    bool contains(const Rational& r) const {
        return std::binary_search(v_.begin(), v_.end(), r);
    }

    bool contains_zero() const { return contains(Rational(0)); }

    bool all_positive() const {
        return v_.empty() || v_.front() > 0;
    }

    bool subset_of(const RatSet& other) const {
        return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
    }

    const std::vector<Rational>& elements() const { return v_; }

    friend bool operator==(const RatSet& a, const RatSet& b) { return a.v_ == b.v_; }

private:
    std::vector<Rational> v_;
};

// {a+b : a in A, b in B}
inline RatSet sumset(const RatSet& a, const RatSet& b) {
    std::vector<Rational> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(x + y);
    return RatSet(std::move(out));
}

// {a/b : a, b in A, b != 0}
inline RatSet ratio_set(const RatSet& a) {
    std::vector<Rational> out;
    out.reserve(a.size() * a.size());
    for (const auto& x : a)
        for (const auto& y : a)
            if (!y.is_zero()) out.push_back(x / y);
    return RatSet(std::move(out));
}

inline RatSet set_union(const RatSet& a, const RatSet& b) {
    std::vector<Rational> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return RatSet(std::move(out));
}

inline std::size_t intersection_size(const RatSet& a, const RatSet& b) {
    std::size_t n = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else {
            ++n;
            ++i;
            ++j;
        }
    }
    return n;
}

} // namespace sumquot
