#include <doctest.h>

#include "helpers.hpp"
#include "oklab/errors.hpp"
#include "oklab/measure.hpp"
#include "oklab/pl_function.hpp"

using namespace oklab;
using namespace oklab::testutil;

TEST_CASE("evaluation and extrema") {
    auto g = g_square_min();
    CHECK(g.value(pt({"0", "0"})) == 1);
    CHECK(g.value(pt({"1", "1"})) == 0);
    CHECK(g.value(pt({"1", "1/2"})) == Rational(1, 2));
    CHECK(g.min_on_domain() == 0);
    CHECK(g.max_on_domain() == 1);
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(ConcavePLFunction(interval(0, 1), {}), precondition_error);
    CHECK_THROWS_AS(ConcavePLFunction(interval(0, 1), {{{Rational(1), Rational(0)}, Rational(0)}}),
                    precondition_error);
}

TEST_CASE("superlevel sets") {
    auto g1 = g_one_minus_x();
    CHECK(superlevel_set(g1, Rational(1, 2)) == interval(0, Rational(1, 2)));
    CHECK(superlevel_set(g1, Rational(-1)) == interval(0, 1)); // vacuous threshold

    auto g2 = g_square_min();
    // {g >= 1} is the triangle x + y <= 1
    RationalPolytope tri = superlevel_set(g2, Rational(1));
    CHECK(tri == standard_simplex(2));
    CHECK(superlevel_set(g2, Rational(2)).empty());
}

TEST_CASE("superlevel sets shrink as the threshold grows") {
    auto g = g_square_min();
    RationalPolytope prev = superlevel_set(g, Rational(-1));
    CHECK(prev == g.domain());
    for (const char* ts : {"0", "1/3", "2/3", "1"}) {
        RationalPolytope cur = superlevel_set(g, Q(ts));
        CHECK(prev.contains(cur));
        prev = cur;
    }
}

TEST_CASE("integration of the named examples") {
    CHECK(integrate_pl(g_one_minus_x()) == Rational(1, 2));

    // g(x,y) = 2 - x - y on the unit square: closed form 2 - 1/2 - 1/2 = 1
    ConcavePLFunction plane(unit_square(), {{{Rational(-1), Rational(-1)}, Rational(2)}});
    CHECK(integrate_pl(plane) == 1);

    ConcavePLFunction constant(unit_square(), {{{Rational(0), Rational(0)}, Rational(7, 3)}});
    CHECK(integrate_pl(constant) == Rational(7, 3) * volume(unit_square()));

    // the 2-D example: 1/2 over the flat region plus 1/3 over the slope
    CHECK(integrate_pl(g_square_min()) == Rational(5, 6));
}

TEST_CASE("subdivision vertices include the crease") {
    auto g = g_square_min();
    auto verts = g.subdivision_vertices();
    bool found = false;
    for (const auto& v : verts) found = found || v == pt({"1", "0"});
    CHECK(found);
    // crease points (1,0) and (0,1) where both pieces tie
    bool crease = false;
    for (const auto& v : verts) crease = crease || v == pt({"0", "1"});
    CHECK(crease);
}

TEST_CASE("layer cake: integral equals the integral of superlevel volumes") {
    // for g >= 0, integrate_pl(g) = first moment of the pushforward measure
    for (const auto& g : {g_one_minus_x(), g_square_min()})
        CHECK(integrate_pl(g) == moment(pushforward_lebesgue(g), 1));
}
