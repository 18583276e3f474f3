#pragma once

#include <string>
#include <vector>

#include "oklab/pl_function.hpp"
#include "oklab/polytope.hpp"

namespace oklab::testutil {

inline Rational Q(const std::string& s) { return parse_rational(s); }

inline RatVec pt(std::initializer_list<std::string> coords) {
    RatVec v;
    for (const auto& s : coords) v.push_back(parse_rational(s));
    return v;
}

// Axis box prod [lo_i, hi_i].
inline RationalPolytope box(const std::vector<std::pair<Rational, Rational>>& bounds) {
    int n = static_cast<int>(bounds.size());
    std::vector<HalfSpace> ineqs;
    for (int i = 0; i < n; ++i) {
        RatVec up(n, Rational(0)), down(n, Rational(0));
        up[i] = 1;
        down[i] = -1;
        ineqs.push_back({up, bounds[i].second});
        ineqs.push_back({down, -bounds[i].first});
    }
    return RationalPolytope(n, std::move(ineqs));
}

inline RationalPolytope interval(const Rational& lo, const Rational& hi) { return box({{lo, hi}}); }

inline RationalPolytope unit_square() { return box({{0, 1}, {0, 1}}); }

// conv{0, e_1, ..., e_n}: x_i >= 0, sum x_i <= 1.
inline RationalPolytope standard_simplex(int n) {
    std::vector<HalfSpace> ineqs;
    for (int i = 0; i < n; ++i) {
        RatVec down(n, Rational(0));
        down[i] = -1;
        ineqs.push_back({down, Rational(0)});
    }
    ineqs.push_back({RatVec(n, Rational(1)), Rational(1)});
    return RationalPolytope(n, std::move(ineqs));
}

// g(x) = 1 - x on [0, 1].
inline ConcavePLFunction g_one_minus_x() {
    return ConcavePLFunction(interval(0, 1), {{{Rational(-1)}, Rational(1)}});
}

// g(x, y) = min(1, 2 - x - y) on the unit square.
inline ConcavePLFunction g_square_min() {
    return ConcavePLFunction(unit_square(), {{{Rational(0), Rational(0)}, Rational(1)},
                                             {{Rational(-1), Rational(-1)}, Rational(2)}});
}

} // namespace oklab::testutil
