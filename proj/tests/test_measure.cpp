#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "oklab/errors.hpp"
#include "oklab/linalg.hpp"
#include "oklab/measure.hpp"

using namespace oklab;
using namespace oklab::testutil;

namespace {

MeasureOnR uniform01() {
    return MeasureOnR({}, {{Rational(0), Rational(1), Poly::constant(Rational(1))}});
}

// Exact integral of g^2 over the domain, via the barycentric product rule
// on a triangulation of each subdivision cell:
//   int_simplex l1*l2 = vol/((n+1)(n+2)) * (sum_i a_i b_i + (sum a)(sum b)).
Rational integral_g_squared(const ConcavePLFunction& g) {
    const int n = g.domain().dim();
    Int fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    Rational total = 0;
    for (size_t i = 0; i < g.pieces().size(); ++i) {
        for (const auto& simplex : triangulate(g.cell(i))) {
            RatMat m(n, RatVec(n));
            for (int r = 0; r < n; ++r)
                for (int j = 0; j < n; ++j) m[r][j] = simplex[r + 1][j] - simplex[0][j];
            Rational vol = abs_rat(determinant(m)) / Rational(fact);
            Rational sum = 0, sumsq = 0;
            for (const auto& v : simplex) {
                Rational val = g.pieces()[i].value(v);
                sum += val;
                sumsq += val * val;
            }
            total += vol * (sumsq + sum * sum) / Rational((n + 1) * (n + 2));
        }
    }
    return total;
}

} // namespace

TEST_CASE("construction normalizes atoms and rejects bad densities") {
    MeasureOnR m({{Rational(1), Rational(1, 2)}, {Rational(0), Rational(1)},
                  {Rational(1), Rational(1, 2)}, {Rational(2), Rational(0)}},
                 {});
    REQUIRE(m.atoms().size() == 2);
    CHECK(m.atoms()[0] == std::pair<Rational, Rational>{Rational(0), Rational(1)});
    CHECK(m.atoms()[1] == std::pair<Rational, Rational>{Rational(1), Rational(1)});

    CHECK_THROWS_AS(MeasureOnR({{Rational(0), Rational(-1)}}, {}), precondition_error);
    CHECK_THROWS_AS(
        MeasureOnR({}, {{Rational(0), Rational(1), Poly::constant(Rational(-1))}}),
        precondition_error);
    CHECK_THROWS_AS(MeasureOnR({}, {{Rational(0), Rational(2), Poly::constant(Rational(1))},
                                    {Rational(1), Rational(3), Poly::constant(Rational(1))}}),
                    precondition_error);
}

TEST_CASE("pushforward of the interval example is uniform") {
    MeasureOnR m = pushforward_lebesgue(g_one_minus_x());
    CHECK(m == uniform01());
    CHECK(m.atoms().empty());
    CHECK(m.total_mass() == 1);
}

TEST_CASE("pushforward of the square example has density t and an atom") {
    MeasureOnR m = pushforward_lebesgue(g_square_min());
    // tail T(t) = 1 - t^2/2 on [0,1], so density t, plus atom 1/2 at the top
    MeasureOnR expect({{Rational(1), Rational(1, 2)}},
                      {{Rational(0), Rational(1), Poly(RatVec{Rational(0), Rational(1)})}});
    CHECK(m == expect);
    CHECK(m.total_mass() == 1);
    CHECK(tail(m, Rational(1)) == Rational(1, 2));
}

TEST_CASE("pushforward of a constant is a single atom") {
    ConcavePLFunction c(unit_square(), {{{Rational(0), Rational(0)}, Rational(3, 4)}});
    MeasureOnR m = pushforward_lebesgue(c);
    CHECK(m == MeasureOnR({{Rational(3, 4), Rational(1)}}, {}));
}

TEST_CASE("pushforward needs a full-dimensional domain") {
    RationalPolytope seg = convex_hull(2, {pt({"0", "0"}), pt({"1", "1"})});
    ConcavePLFunction g(seg, {{{Rational(1), Rational(0)}, Rational(0)}});
    CHECK_THROWS_AS(pushforward_lebesgue(g), precondition_error);
}

TEST_CASE("tail convention includes the atom at t") {
    MeasureOnR two_atoms({{Rational(0), Rational(1)}, {Rational(1), Rational(1)}}, {});
    CHECK(tail(two_atoms, Rational(0)) == 2);
    CHECK(tail(two_atoms, Rational(1, 2)) == 1);
    CHECK(tail(uniform01(), Rational(1, 2)) == Rational(1, 2));
    CHECK(tail(uniform01(), Rational(-5)) == 1);
    CHECK(tail(uniform01(), Rational(5)) == 0);
}

TEST_CASE("tail is decreasing with the right limits") {
    MeasureOnR m = pushforward_lebesgue(g_square_min());
    Rational prev = m.total_mass();
    for (const char* ts : {"-1", "0", "1/4", "1/2", "3/4", "1", "2"}) {
        Rational cur = tail(m, Q(ts));
        CHECK(cur <= prev);
        prev = cur;
    }
}

TEST_CASE("moments of the named examples") {
    CHECK(moment(uniform01(), 1) == Rational(1, 2));
    MeasureOnR atom({{Rational(1, 2), Rational(3)}}, {});
    CHECK(moment(atom, 2) == Rational(3, 4));
    CHECK(moment(pushforward_lebesgue(g_one_minus_x()), 2) == Rational(1, 3));
}

TEST_CASE("pushforward moments match independent simplicial integration") {
    for (const auto& g : {g_one_minus_x(), g_square_min()}) {
        MeasureOnR m = pushforward_lebesgue(g);
        CHECK(moment(m, 0) == volume(g.domain()));
        CHECK(moment(m, 1) == integrate_pl(g));
        CHECK(moment(m, 2) == integral_g_squared(g));
    }
}

TEST_CASE("kolmogorov distance on the named examples") {
    MeasureOnR u = uniform01();
    CHECK(kolmogorov_distance(u, u) == 0);

    MeasureOnR two_atoms({{Rational(0), Rational(1)}, {Rational(1), Rational(1)}}, {});
    CHECK(kolmogorov_distance(two_atoms, u) == 1); // tails 2 vs 1 as t -> 0-

    // the empirical grid measure (1/10) sum of atoms at j/10 vs uniform
    std::vector<std::pair<Rational, Rational>> atoms;
    for (int j = 0; j <= 10; ++j) atoms.emplace_back(Rational(j, 10), Rational(1, 10));
    CHECK(kolmogorov_distance(MeasureOnR(std::move(atoms), {}), u) == Rational(1, 10));
}

TEST_CASE("kolmogorov distance finds interior extrema") {
    // densities 1 and 2t on [0,1]: tails (1-t) and (1-t^2) cross slopes at t=1/2,
    // where the gap is (1/2 - 1/4) = 1/4
    MeasureOnR lin({}, {{Rational(0), Rational(1), Poly(RatVec{Rational(0), Rational(2)})}});
    CHECK(kolmogorov_distance(uniform01(), lin) == Rational(1, 4));
}

TEST_CASE("kolmogorov distance is a metric on a measure triple") {
    MeasureOnR a = uniform01();
    MeasureOnR b = pushforward_lebesgue(g_square_min());
    MeasureOnR c({{Rational(1, 2), Rational(1)}}, {});
    CHECK(kolmogorov_distance(a, b) == kolmogorov_distance(b, a));
    CHECK(kolmogorov_distance(a, c) <= kolmogorov_distance(a, b) + kolmogorov_distance(b, c));
    CHECK(kolmogorov_distance(a, b) > 0);
}

TEST_CASE("layer cake identity for nonnegative measures") {
    // int t dm = int_0^inf tail(t) dt for m supported on [0, inf): evaluate the
    // right side by exact refinement over the piece grid
    MeasureOnR m = pushforward_lebesgue(g_square_min());
    std::vector<Rational> grid{Rational(0)};
    for (const auto& p : m.pieces()) {
        grid.push_back(p.lo);
        grid.push_back(p.hi);
    }
    for (const auto& [loc, mass] : m.atoms()) grid.push_back(loc);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    Rational rhs = 0;
    for (size_t i = 0; i + 1 < grid.size(); ++i) {
        // on (a,b): tail(t) = tail(b) + int_t^b density
        Rational a = grid[i], b = grid[i + 1];
        Poly dens;
        for (const auto& p : m.pieces())
            if (p.lo <= a && b <= p.hi) dens = p.density;
        // int_a^b tail(t) dt = tail(b)(b-a) + int_a^b int_t^b dens ds dt
        Poly anti = dens.antiderivative();
        rhs += tail(m, b) * (b - a);
        rhs += anti.eval(b) * (b - a) - anti.integral(a, b);
    }
    CHECK(rhs == moment(m, 1));
}

TEST_CASE("dh structure check") {
    CHECK(dh_structure_check(uniform01(), 1));
    MeasureOnR lin({}, {{Rational(0), Rational(1), Poly(RatVec{Rational(0), Rational(1)})}});
    CHECK(dh_structure_check(lin, 2));
    MeasureOnR quad({}, {{Rational(0), Rational(1), Poly(RatVec{Rational(0), Rational(0), Rational(1)})}});
    CHECK(!dh_structure_check(quad, 2));
}

TEST_CASE("measure equality is refinement-insensitive") {
    MeasureOnR whole({}, {{Rational(0), Rational(2), Poly::constant(Rational(1))}});
    MeasureOnR split({}, {{Rational(0), Rational(1), Poly::constant(Rational(1))},
                          {Rational(1), Rational(2), Poly::constant(Rational(1))}});
    CHECK(whole == split);
    MeasureOnR other({}, {{Rational(0), Rational(2), Poly::constant(Rational(1, 2))}});
    CHECK(!(whole == other));
}

TEST_CASE("mass scaling") {
    MeasureOnR m = pushforward_lebesgue(g_square_min()).scaled_mass(Rational(3));
    CHECK(m.total_mass() == 3);
}
