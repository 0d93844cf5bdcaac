#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "sumquot/intpow.hpp"
#include "sumquot/ratset.hpp"

namespace sumquot {

// Two families of plane curves, each the locus of a bilinear slope
// coincidence.  A curve of the first family is parameterized by a point
// (a, lam*a) on a line through the origin, relative to a fixed pair of
// slopes (lam1, lam2):
//
//     (lam*a + lam1*x)(a + y) == (lam*a + lam2*y)(a + x).
//
// A curve of the second family is parameterized by two anchor points
// (a, lam3*a), (b, lam4*b) relative to slopes lam1, lam2:
//
//     (lam3*a + lam1*x)(b + y) == (lam4*b + lam2*y)(a + x).
//
// The constructors restrict parameters to the domain in which the
// intersection bounds below are theorems: positive anchors, lam1 != lam2
// (resp. lam3 != lam4), and the anchor slope(s) distinct from lam1, lam2.
// Outside that domain the loci can degenerate into line pairs with
// infinite intersections.

class CurveL {
public:
    CurveL(Rational a, Rational lam, Rational lam1, Rational lam2)
        : a_(std::move(a)), lam_(std::move(lam)), lam1_(std::move(lam1)),
          lam2_(std::move(lam2)) {
        require_input(a_ > 0, "curve anchor must have positive x");
        require_input(lam1_ != lam2_, "curve family requires lam1 != lam2");
        require_input(lam_ != lam1_ && lam_ != lam2_,
                      "anchor slope must differ from lam1 and lam2");
    }

    const Rational& a() const { return a_; }
    const Rational& lam() const { return lam_; }
    const Rational& lam1() const { return lam1_; }
    const Rational& lam2() const { return lam2_; }

    bool contains(const Rational& x, const Rational& y) const {
        return (lam_ * a_ + lam1_ * x) * (a_ + y) ==
               (lam_ * a_ + lam2_ * y) * (a_ + x);
    }
    bool contains(const RatPoint& p) const { return contains(p.x, p.y); }

    friend bool operator==(const CurveL& c, const CurveL& d) {
        return c.a_ == d.a_ && c.lam_ == d.lam_ && c.lam1_ == d.lam1_ &&
               c.lam2_ == d.lam2_;
    }

private:
    Rational a_, lam_, lam1_, lam2_;
};

class CurveLPrime {
public:
    CurveLPrime(Rational a, Rational b, Rational lam1, Rational lam2,
                Rational lam3, Rational lam4)
        : a_(std::move(a)), b_(std::move(b)), lam1_(std::move(lam1)),
          lam2_(std::move(lam2)), lam3_(std::move(lam3)), lam4_(std::move(lam4)) {
        require_input(a_ > 0 && b_ > 0, "curve anchors must have positive x");
        require_input(lam3_ != lam4_, "curve family requires lam3 != lam4");
        require_input(lam1_ != lam3_ && lam1_ != lam4_ && lam2_ != lam3_ &&
                          lam2_ != lam4_,
                      "anchor slopes must differ from lam1 and lam2");
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& lam1() const { return lam1_; }
    const Rational& lam2() const { return lam2_; }
    const Rational& lam3() const { return lam3_; }
    const Rational& lam4() const { return lam4_; }

    bool contains(const Rational& x, const Rational& y) const {
        return (lam3_ * a_ + lam1_ * x) * (b_ + y) ==
               (lam4_ * b_ + lam2_ * y) * (a_ + x);
    }
    bool contains(const RatPoint& p) const { return contains(p.x, p.y); }

    friend bool operator==(const CurveLPrime& c, const CurveLPrime& d) {
        return c.a_ == d.a_ && c.b_ == d.b_ && c.lam1_ == d.lam1_ &&
               c.lam2_ == d.lam2_ && c.lam3_ == d.lam3_ && c.lam4_ == d.lam4_;
    }

private:
    Rational a_, b_, lam1_, lam2_, lam3_, lam4_;
};

// The grid P = xs x ys of candidate incidence points, strictly positive so
// the origin (through which all first-family curves pass) is excluded.
struct PointGrid {
    RatSet xs, ys;

    PointGrid(RatSet x, RatSet y) : xs(std::move(x)), ys(std::move(y)) {
        require_input(xs.all_positive() && ys.all_positive(),
                      "grid coordinates must be strictly positive");
    }

    std::size_t size() const { return xs.size() * ys.size(); }
};

// A real but non-rational intersection point, kept symbolically: it is the
// y-root of qa*y^2 + qb*y + qc = 0 selected by `sign`, with non-square
// positive discriminant.  Such a point can never coincide with a rational
// grid point, but it does count toward the two-point intersection bound.
struct QuadraticRootMarker {
    Rational qa, qb, qc;
    int sign; // +1 / -1 branch of the square root
};

struct IntersectionResult {
    std::vector<RatPoint> points;                 // exact rational intersections
    std::vector<QuadraticRootMarker> irrational;  // real, non-rational ones

    std::size_t size() const { return points.size() + irrational.size(); }
};

namespace detail {

struct QuadraticRoots {
    std::vector<Rational> rational;
    std::vector<QuadraticRootMarker> irrational;
    bool identically_zero = false;
};

// All real roots of qa*y^2 + qb*y + qc = 0, split into rational roots and
// symbolic markers for irrational ones.
inline QuadraticRoots solve_quadratic(const Rational& qa, const Rational& qb,
                                      const Rational& qc) {
    QuadraticRoots out;
    if (qa.is_zero()) {
        if (qb.is_zero()) {
            out.identically_zero = qc.is_zero();
            return out;
        }
        out.rational.push_back(-qc / qb);
        return out;
    }
    Rational disc = qb * qb - Rational(4) * qa * qc;
    if (disc < 0) return out;
    if (disc.is_zero()) {
        out.rational.push_back(-qb / (Rational(2) * qa));
        return out;
    }
    Rational root;
    if (rat_sqrt_exact(disc, root)) {
        Rational two_a = Rational(2) * qa;
        out.rational.push_back((-qb + root) / two_a);
        out.rational.push_back((-qb - root) / two_a);
    } else {
        out.irrational.push_back({qa, qb, qc, +1});
        out.irrational.push_back({qa, qb, qc, -1});
    }
    return out;
}

inline void push_unique(std::vector<RatPoint>& v, const RatPoint& p) {
    for (const auto& q : v)
        if (q == p) return;
    v.push_back(p);
}

} // namespace detail

// Intersection of two distinct first-family curves sharing (lam1, lam2).
// Both always pass through the origin; the remaining factor of the
// intersection equation is linear in y, so every intersection point is
// rational and there are at most two in total.
inline IntersectionResult intersect(const CurveL& c1, const CurveL& c2) {
    require_input(c1.lam1() == c2.lam1() && c1.lam2() == c2.lam2(),
                  "curves must share lam1 and lam2");
    require_input(!(c1 == c2), "intersection of identical curves");
    const Rational &a = c1.a(), &lam = c1.lam();
    const Rational &b = c2.a(), &lamp = c2.lam();
    const Rational &l1 = c1.lam1(), &l2 = c1.lam2();

    IntersectionResult out;
    out.points.push_back({Rational(0), Rational(0)});

    // Linear factor: y * (a(l2-lam) - b(l2-lamp)) + a*b*(lamp-lam) = 0.
    Rational coef = a * (l2 - lam) - b * (l2 - lamp);
    Rational cons = a * b * (lamp - lam);
    if (coef.is_zero()) {
        // cons == 0 here would force the curves to be identical.
        require_invariant(!cons.is_zero(), "degenerate intersection of distinct curves");
        return out;
    }
    Rational y = -cons / coef;
    if (y.is_zero()) return out; // coincides with the origin
    // x from the rearranged curve equation; a vanishing denominator means y
    // sits on the line the curve provably misses.
    Rational den = y * (l1 - l2) + a * (l1 - lam);
    if (den.is_zero()) return out;
    Rational x = a * y * (l2 - lam) / den;
    RatPoint p{x, y};
    if (c1.contains(p) && c2.contains(p)) detail::push_unique(out.points, p);
    return out;
}

// Intersection of two distinct second-family curves sharing all four
// slopes.  Genuinely quadratic: intersections may be irrational, in which
// case they are reported as markers (still counted toward the <= 2 bound).
inline IntersectionResult intersect(const CurveLPrime& c1, const CurveLPrime& c2) {
    require_input(c1.lam1() == c2.lam1() && c1.lam2() == c2.lam2() &&
                      c1.lam3() == c2.lam3() && c1.lam4() == c2.lam4(),
                  "curves must share lam1..lam4");
    require_input(!(c1 == c2), "intersection of identical curves");
    const Rational &a = c1.a(), &b = c1.b(), &ap = c2.a(), &bp = c2.b();
    const Rational &l1 = c1.lam1(), &l2 = c1.lam2(), &l3 = c1.lam3(), &l4 = c1.lam4();

    Rational qa = (l1 - l2) * (l2 - l3) * (a - ap);
    Rational qb = a * bp * (l1 - l4) * (l2 - l3) + a * b * (l1 - l2) * (l4 - l3) -
                  ap * b * (l2 - l3) * (l1 - l4) - ap * bp * (l4 - l3) * (l1 - l2);
    Rational qc = b * bp * (l4 - l3) * (l1 - l4) * (a - ap);

    auto roots = detail::solve_quadratic(qa, qb, qc);
    // The all-zero case is provably impossible for distinct curves in this
    // family; it is asserted rather than silently tolerated.
    require_invariant(!roots.identically_zero,
                      "vanishing intersection equation for distinct curves");

    IntersectionResult out;
    out.irrational = std::move(roots.irrational);
    for (const auto& y : roots.rational) {
        Rational den = y * (l1 - l2) + b * (l1 - l4);
        if (den.is_zero()) continue; // excluded line; the curve misses it
        Rational x = a * (y * (l2 - l3) + b * (l4 - l3)) / den;
        RatPoint p{x, y};
        if (c1.contains(p) && c2.contains(p)) detail::push_unique(out.points, p);
    }
    require_invariant(out.size() <= 2, "more than two curve intersections");
    return out;
}

// All second-family parameter pairs (a, b) whose curve passes through both
// p and q, for fixed slopes.  At most two; every returned pair is verified
// by direct membership and satisfies the constructor's positivity domain.
inline std::vector<std::pair<Rational, Rational>> curves_through_pair(
    const RatPoint& p, const RatPoint& q, const Rational& l1, const Rational& l2,
    const Rational& l3, const Rational& l4) {
    require_input(p != q, "the two points must be distinct");
    require_input(p.x > 0 && p.y > 0 && q.x > 0 && q.y > 0,
                  "points must have positive coordinates");
    require_input(l3 != l4, "curve family requires lam3 != lam4");
    require_input(l1 != l3 && l1 != l4 && l2 != l3 && l2 != l4,
                  "anchor slopes must differ from lam1 and lam2");
    const Rational &x0 = p.x, &y0 = p.y, &x1 = q.x, &y1 = q.y;

    Rational qa = (x0 - x1) * (l3 - l4) * (l4 - l1);
    Rational qb = (x0 * y0 - x1 * y1) * (l2 - l1) * (l3 - l4) -
                  (x1 * y0 - x0 * y1) * (l4 - l1) * (l3 - l2);
    Rational qc = y0 * y1 * (l3 - l2) * (l2 - l1) * (x0 - x1);

    auto roots = detail::solve_quadratic(qa, qb, qc);
    // All coefficients vanishing forces x0 == x1 and then y0 == y1,
    // contradicting p != q.
    require_invariant(!roots.identically_zero,
                      "vanishing through-pair equation for distinct points");

    std::vector<std::pair<Rational, Rational>> out;
    for (const auto& b : roots.rational) {
        if (!(b > 0)) continue;
        Rational brace = b * (l3 - l4) + y0 * (l3 - l2);
        if (brace.is_zero()) continue; // no curve with this b passes through p
        Rational a = (b * x0 * (l4 - l1) + x0 * y0 * (l2 - l1)) / brace;
        if (!(a > 0)) continue;
        CurveLPrime c(a, b, l1, l2, l3, l4);
        if (c.contains(p) && c.contains(q)) out.emplace_back(a, b);
    }
    require_invariant(out.size() <= 2, "more than two curves through a point pair");
    return out;
}

template <class Curve>
std::vector<RatPoint> grid_points_on(const Curve& c, const PointGrid& grid) {
    std::vector<RatPoint> out;
    for (const auto& x : grid.xs)
        for (const auto& y : grid.ys)
            if (c.contains(x, y)) out.push_back({x, y});
    return out;
}

// Curves of the family containing at least k grid points (k >= 2), by
// exact membership counting.
template <class Curve>
std::vector<Curve> rich_curves(std::span<const Curve> family,
                               const PointGrid& grid, std::size_t k) {
    require_input(k >= 2, "richness threshold must be at least 2");
    std::vector<Curve> out;
    for (const auto& c : family) {
        std::size_t count = 0;
        for (const auto& x : grid.xs) {
            for (const auto& y : grid.ys)
                if (c.contains(x, y)) ++count;
            if (count >= k) break;
        }
        if (count >= k) out.push_back(c);
    }
    return out;
}

// Exhaustive verification of the two incidence preconditions over a finite
// family and grid: every curve pair shares at most `curve_pair_limit` grid
// points, and every grid point pair lies on at most `point_pair_limit`
// curves.  Violations carry witnesses.
struct IncidenceViolation {
    std::size_t first = 0, second = 0; // curve indices, or flattened grid indices
    std::size_t count = 0;
};

struct IncidenceReport {
    bool pass = false;
    std::size_t curve_pair_limit = 0, point_pair_limit = 0;
    std::size_t max_shared_grid_points = 0;  // over curve pairs
    std::size_t max_curves_through_pair = 0; // over grid point pairs
    std::size_t curves = 0, grid_size = 0;
    std::vector<IncidenceViolation> curve_pair_violations;
    std::vector<IncidenceViolation> point_pair_violations;
};

namespace detail {

template <class Curve>
IncidenceReport verify_incidences(std::span<const Curve> family,
                                  const PointGrid& grid,
                                  std::size_t curve_pair_limit,
                                  std::size_t point_pair_limit) {
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            require_input(!(family[i] == family[j]),
                          "duplicate curves in family");

    IncidenceReport rep;
    rep.curve_pair_limit = curve_pair_limit;
    rep.point_pair_limit = point_pair_limit;
    rep.curves = family.size();
    rep.grid_size = grid.size();

    // Incidence lists: for each grid point, which curves contain it.
    const std::size_t ny = grid.ys.size();
    std::vector<std::vector<std::size_t>> at_point(grid.size());
    std::vector<std::vector<std::size_t>> on_curve(family.size());
    for (std::size_t ci = 0; ci < family.size(); ++ci) {
        for (std::size_t xi = 0; xi < grid.xs.size(); ++xi)
            for (std::size_t yi = 0; yi < ny; ++yi)
                if (family[ci].contains(grid.xs[xi], grid.ys[yi])) {
                    at_point[xi * ny + yi].push_back(ci);
                    on_curve[ci].push_back(xi * ny + yi);
                }
    }

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> curve_pairs;
    for (const auto& cs : at_point)
        for (std::size_t i = 0; i < cs.size(); ++i)
            for (std::size_t j = i + 1; j < cs.size(); ++j)
                ++curve_pairs[{cs[i], cs[j]}];
    for (const auto& [pair, cnt] : curve_pairs) {
        rep.max_shared_grid_points = std::max(rep.max_shared_grid_points, cnt);
        if (cnt > curve_pair_limit)
            rep.curve_pair_violations.push_back({pair.first, pair.second, cnt});
    }

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> point_pairs;
    for (const auto& ps : on_curve)
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = i + 1; j < ps.size(); ++j)
                ++point_pairs[{ps[i], ps[j]}];
    for (const auto& [pair, cnt] : point_pairs) {
        rep.max_curves_through_pair = std::max(rep.max_curves_through_pair, cnt);
        if (cnt > point_pair_limit)
            rep.point_pair_violations.push_back({pair.first, pair.second, cnt});
    }

    rep.pass = rep.curve_pair_violations.empty() && rep.point_pair_violations.empty();
    return rep;
}

} // namespace detail

// First family: distinct curves share at most ONE grid point (they already
// meet at the origin, which positive grids exclude), and a point pair lies
// on at most one curve.
inline IncidenceReport verify_incidence_conditions(std::span<const CurveL> family,
                                                   const PointGrid& grid) {
    return detail::verify_incidences(family, grid, 1, 1);
}

// Second family: two grid points per curve pair, two curves per point pair.
inline IncidenceReport verify_incidence_conditions(std::span<const CurveLPrime> family,
                                                   const PointGrid& grid) {
    return detail::verify_incidences(family, grid, 2, 2);
}

} // namespace sumquot
