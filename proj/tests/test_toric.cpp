#include <doctest.h>

#include "helpers.hpp"
#include "oklab/errors.hpp"
#include "oklab/toric.hpp"

using namespace oklab;
using namespace oklab::testutil;

TEST_CASE("construction validates the datum") {
    // integral base with g >= 0 passes
    ToricTestConfiguration ok(g_one_minus_x());
    CHECK(ok.base() == interval(0, 1));

    // negative g rejected
    ConcavePLFunction neg(interval(0, 1), {{{Rational(-1)}, Rational(1, 2)}});
    CHECK_THROWS_AS(ToricTestConfiguration{neg}, precondition_error);

    // non-integral base rejected
    ConcavePLFunction frac(interval(0, Rational(1, 2)), {{{Rational(0)}, Rational(1)}});
    CHECK_THROWS_AS(ToricTestConfiguration{frac}, precondition_error);
}

TEST_CASE("roof polytope of the interval example is a triangle") {
    ToricTestConfiguration t(g_one_minus_x());
    RationalPolytope q = roof_polytope(t);
    CHECK(q == convex_hull(2, {pt({"0", "0"}), pt({"1", "0"}), pt({"0", "1"})}));
    CHECK(volume(q) == integrate_pl(t.transform_datum()));
    CHECK(t.integrality_scale() == 1);
}

TEST_CASE("roof polytope of a constant is a box") {
    ConcavePLFunction one(interval(0, 1), {{{Rational(0)}, Rational(1)}});
    ToricTestConfiguration t(one);
    CHECK(roof_polytope(t) == unit_square());
}

TEST_CASE("roof volume equals the integral for the 2-D example") {
    ToricTestConfiguration t(g_square_min());
    CHECK(volume(roof_polytope(t)) == integrate_pl(t.transform_datum()));
}

TEST_CASE("integrality scale of a fractional roof") {
    // g(x) = min(1/2, 1 - x) has roof vertices with halves
    ConcavePLFunction g(interval(0, 1),
                        {{{Rational(0)}, Rational(1, 2)}, {{Rational(-1)}, Rational(1)}});
    ToricTestConfiguration t(g);
    CHECK(t.integrality_scale() == 2);
}

TEST_CASE("weight measures of the interval example at k=2") {
    ToricTestConfiguration t(g_one_minus_x());
    WeightMeasurePair wm = weight_measure(t, 2);
    CHECK(wm.raw == MeasureOnR({{Rational(0), Rational(1)},
                                {Rational(1), Rational(1)},
                                {Rational(2), Rational(1)}},
                               {}));
    CHECK(wm.normalized == MeasureOnR({{Rational(0), Rational(1, 2)},
                                       {Rational(1, 2), Rational(1, 2)},
                                       {Rational(1), Rational(1, 2)}},
                                      {}));
}

TEST_CASE("weight measures of a constant roof") {
    ConcavePLFunction one(interval(0, 1), {{{Rational(0)}, Rational(1)}});
    ToricTestConfiguration t(one);
    WeightMeasurePair wm = weight_measure(t, 3);
    CHECK(wm.raw == MeasureOnR({{Rational(3), Rational(4)}}, {}));
    CHECK(wm.normalized == MeasureOnR({{Rational(1), Rational(4, 3)}}, {}));
}

TEST_CASE("raw weights stay within k times the sup of g") {
    for (const auto& g : {g_one_minus_x(), g_square_min()}) {
        ToricTestConfiguration t(g);
        Rational bound = t.transform_datum().max_on_domain();
        for (long long k : {1, 5, 17, 50}) {
            MeasureOnR raw = weight_measure(t, k).raw;
            for (const auto& [eta, mass] : raw.atoms()) {
                CHECK(eta <= bound * k);
                CHECK(eta >= 0);
            }
        }
    }
}

TEST_CASE("total raw mass counts the lattice points") {
    ToricTestConfiguration t(g_square_min());
    for (long long k : {1, 2, 7}) {
        Rational d_k = weight_measure(t, k).raw.total_mass();
        CHECK(d_k == Rational(static_cast<long long>(
                  lattice_points(dilate(t.base(), Rational(k))).size())));
    }
}

TEST_CASE("toric filtration reproduces the normalized weight measure") {
    ToricTestConfiguration t(g_one_minus_x());
    WeightFiltration f = toric_filtration(t, 8);
    for (long long k : {1, 2, 5, 8})
        CHECK(nu_measure(f, k) == weight_measure(t, k).normalized);
    CHECK(check_admissible(f, 8).pass);
}

TEST_CASE("trivial configuration has everything at zero") {
    ConcavePLFunction zero(interval(0, 1), {{{Rational(0)}, Rational(0)}});
    ToricTestConfiguration t(zero);
    WeightFiltration f = toric_filtration(t, 4);
    for (long long k : {1, 4}) {
        MeasureOnR mu = weight_measure(t, k).normalized;
        CHECK(mu.atoms().size() == 1);
        CHECK(mu.atoms()[0].first == 0);
    }
    CHECK(check_admissible(f, 4).pass);
}

TEST_CASE("G_k/k sits on or within 1/k below the graph of g") {
    for (const auto& g : {g_one_minus_x(), g_square_min()}) {
        ToricTestConfiguration t(g);
        WeightFiltration f = toric_filtration(t, 12);
        for (long long k = 1; k <= 12; ++k)
            for (const auto& [alpha, w] : f.level(k)) {
                RatVec x(alpha.size());
                for (size_t i = 0; i < x.size(); ++i) x[i] = Rational(alpha[i], k);
                Rational gap = g.value(x) - Rational(w, k);
                CHECK(gap >= 0);
                CHECK(gap < Rational(1, k));
                Rational kg = g.value(x) * k;
                if (denominator(kg) == 1) CHECK(gap == 0);
            }
    }
}

TEST_CASE("f0 of the interval example is exactly 1/2 at every degree") {
    ToricTestConfiguration t(g_one_minus_x());
    std::vector<long long> ks;
    for (long long k = 1; k <= 20; ++k) ks.push_back(k);
    F0Result res = f0_invariant(t, ks);
    CHECK(res.f0 == Rational(1, 2));
    for (const auto& [k, ratio] : res.ratio_table) CHECK(ratio == Rational(1, 2));
}

TEST_CASE("f0 of a constant roof is 1") {
    ConcavePLFunction one(interval(0, 1), {{{Rational(0)}, Rational(1)}});
    F0Result res = f0_invariant(ToricTestConfiguration(one), {1, 3, 9});
    CHECK(res.f0 == 1);
    for (const auto& [k, ratio] : res.ratio_table) CHECK(ratio == 1);
}

TEST_CASE("f0 of the 2-D example") {
    ToricTestConfiguration t(g_square_min());
    F0Result res = f0_invariant(t, {10, 40});
    CHECK(res.f0 == Rational(5, 6)); // integrate_pl oracle fixed this value
    // closed-form sums: w_10 = 1035, d_10 = 121; w_40 = 56540, d_40 = 1681
    CHECK(res.ratio_table[0].second == Rational(1035, 1210));
    CHECK(res.ratio_table[1].second == Rational(56540, 67240));
    for (const auto& [k, ratio] : res.ratio_table)
        CHECK(abs_rat(ratio - res.f0) <= Rational(2, k));
}

TEST_CASE("weak convergence diagnostics for the interval example") {
    ToricTestConfiguration t(g_one_minus_x());
    MeasureOnR limit = pushforward_lebesgue(t.transform_datum());
    Rational prev = -1;
    for (long long k : {5, 10, 20, 40, 80}) {
        Rational d = kolmogorov_distance(weight_measure(t, k).normalized, limit);
        CHECK(d == Rational(1, k)); // exact closed form for this datum
        if (prev >= 0) CHECK(d <= prev);
        prev = d;
    }
}

TEST_CASE("weak convergence diagnostics for the square example") {
    ToricTestConfiguration t(g_square_min());
    MeasureOnR limit = pushforward_lebesgue(t.transform_datum());
    Rational prev = -1;
    for (long long k : {5, 10, 20, 40, 80}) {
        Rational d = kolmogorov_distance(weight_measure(t, k).normalized, limit);
        if (prev >= 0) CHECK(d <= prev);
        prev = d;
    }
    CHECK(prev <= Rational(1, 10));
}

TEST_CASE("first moments converge to the integral of g") {
    ToricTestConfiguration t(g_square_min());
    Rational target = integrate_pl(t.transform_datum());
    Rational prev = -1;
    for (long long k : {5, 10, 20, 40}) {
        Rational gap = abs_rat(moment(weight_measure(t, k).normalized, 1) - target);
        if (prev >= 0) CHECK(gap <= prev);
        prev = gap;
    }
    CHECK(prev <= Rational(1, 10));
}

TEST_CASE("degenerate base is rejected by f0") {
    // a segment in R^2 is integral but not full-dimensional
    RationalPolytope seg = convex_hull(2, {pt({"0", "0"}), pt({"1", "0"})});
    ConcavePLFunction g(seg, {{{Rational(0), Rational(0)}, Rational(1)}});
    ToricTestConfiguration t(g);
    CHECK_THROWS_AS(f0_invariant(t, {1}), precondition_error);
}
