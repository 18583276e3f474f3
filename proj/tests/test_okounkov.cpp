#include <doctest.h>

#include <algorithm>
#include <iterator>
#include <map>
#include <random>

#include "helpers.hpp"
#include "oklab/errors.hpp"
#include "oklab/lp.hpp"
#include "oklab/okounkov.hpp"

using namespace oklab;
using namespace oklab::testutil;

TEST_CASE("okounkov bodies of the shipped generator sets") {
    CHECK(okounkov_body(FiniteSemigroup(2, {{0, 1}, {1, 1}})) == interval(0, 1));
    CHECK(okounkov_body(FiniteSemigroup(3, {{0, 0, 1}, {1, 0, 1}, {0, 1, 1}})) ==
          standard_simplex(2));
    // a single ray gives the point {0}
    RationalPolytope origin = okounkov_body(FiniteSemigroup(2, {{0, 1}}));
    CHECK(origin.vertices().size() == 1);
    CHECK(origin.vertices()[0] == pt({"0"}));
}

TEST_CASE("cone slice with generators at higher levels") {
    // (1,2) normalizes to 1/2, so the body is [0, 1/2]
    CHECK(okounkov_body(FiniteSemigroup(2, {{0, 1}, {1, 2}})) == interval(0, Rational(1, 2)));
}

TEST_CASE("okounkov body rejections") {
    CHECK_THROWS_AS(okounkov_body(FiniteSemigroup(2, {})), precondition_error);
    CHECK_THROWS_AS(okounkov_body(FiniteSemigroup(2, {{0, 0}})), precondition_error); // empty grading
    CHECK_THROWS_AS(okounkov_body(FiniteSemigroup(2, {{1, 0}, {0, 1}})), precondition_error);
    CHECK_THROWS_AS(FiniteSemigroup(2, {{-1, 1}}), precondition_error);
}

TEST_CASE("delta_k by dynamic programming") {
    FiniteSemigroup s(2, {{0, 1}, {2, 1}});
    CHECK(delta_k(s, 1) == std::vector<RatVec>{pt({"0"}), pt({"2"})});
    CHECK(delta_k(s, 2) == std::vector<RatVec>{pt({"0"}), pt({"1"}), pt({"2"})});

    // inclusion Delta_k subset Delta cap (1/k)Z^n
    RationalPolytope body = okounkov_body(s);
    for (const auto& a : delta_k(s, 3)) {
        CHECK(body.contains(a));
        CHECK(denominator(a[0]) <= 3);
        CHECK(3 % to_ll(denominator(a[0])) == 0);
    }
}

TEST_CASE("delta_k additivity for k, m up to 5") {
    for (const auto& gens :
         {std::vector<IntVec>{{0, 1}, {2, 1}}, std::vector<IntVec>{{0, 0, 1}, {1, 0, 1}, {0, 1, 1}}}) {
        FiniteSemigroup s(static_cast<int>(gens[0].size()), gens);
        std::map<long long, std::vector<RatVec>> dk;
        for (long long k = 1; k <= 10; ++k) dk[k] = delta_k(s, k);
        for (long long k = 1; k <= 5; ++k)
            for (long long m = 1; m <= 5; ++m)
                for (const auto& a : dk[k])
                    for (const auto& b : dk[m]) {
                        RatVec mix(a.size());
                        for (size_t i = 0; i < a.size(); ++i)
                            mix[i] = (a[i] * k + b[i] * m) / Rational(k + m);
                        const auto& target = dk[k + m];
                        CHECK(std::find(target.begin(), target.end(), mix) != target.end());
                    }
    }
}

TEST_CASE("hull of sampled delta_k converges to the body") {
    FiniteSemigroup s(2, {{0, 1}, {1, 2}});
    RationalPolytope body = okounkov_body(s);

    // L-infinity distance from a body vertex to a polytope, via exact LP
    auto linf_dist = [](const RatVec& v, const RationalPolytope& p) {
        const int n = p.dim();
        std::vector<RatVec> rows;
        RatVec rhs;
        for (const auto& h : p.inequalities()) {
            RatVec r = h.a;
            r.push_back(Rational(0));
            rows.push_back(std::move(r));
            rhs.push_back(h.b);
        }
        for (int i = 0; i < n; ++i) {
            RatVec up(n + 1, Rational(0)), down(n + 1, Rational(0));
            up[i] = 1;
            up[n] = -1; // x_i - t <= v_i
            down[i] = -1;
            down[n] = -1; // -x_i - t <= -v_i
            rows.push_back(std::move(up));
            rhs.push_back(v[i]);
            rows.push_back(std::move(down));
            rhs.push_back(-v[i]);
        }
        RatVec obj(n + 1, Rational(0));
        obj[n] = -1; // minimize t
        LpResult r = lp_maximize(rows, rhs, obj);
        REQUIRE(r.status == LpStatus::Optimal);
        return Rational(-r.value);
    };

    Rational prev = -1;
    for (long long kmax : {1, 2, 4}) {
        std::vector<RatVec> samples;
        for (long long k = 1; k <= kmax; ++k)
            for (const auto& a : delta_k(s, k)) samples.push_back(a);
        RationalPolytope hull = convex_hull(1, samples);
        CHECK(body.contains(hull));
        Rational dist = 0;
        for (const auto& v : body.vertices()) dist = std::max(dist, linf_dist(v, hull));
        if (prev >= 0) CHECK(dist <= prev);
        prev = dist;
    }
    CHECK(prev == 0); // [0, 1/2] is reached at k = 2 already
}

TEST_CASE("lowest term valuation") {
    auto mi = [](std::initializer_list<long long> e) { return MultiIndex(IntVec(e)); };
    CHECK(lowest_term_valuation({{mi({0, 1}), Rational(1)}, {mi({2, 0}), Rational(1)}}) ==
          mi({0, 1}));
    CHECK(lowest_term_valuation({{mi({3, 0, 0}), Rational(5)}}) == mi({3, 0, 0}));
    CHECK_THROWS_AS(lowest_term_valuation({}), precondition_error);
    CHECK_THROWS_AS(lowest_term_valuation({{mi({1}), Rational(0)}}), precondition_error);
    CHECK_THROWS_AS(lowest_term_valuation({{mi({1}), Rational(1)}, {mi({1}), Rational(2)}}),
                    precondition_error);
}

TEST_CASE("valuation is multiplicative against a polynomial product oracle") {
    using Terms = std::map<IntVec, Rational>;
    std::mt19937 rng(987123);
    std::uniform_int_distribution<int> expo(0, 4);
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<int> nterms(1, 5);

    auto random_poly = [&](int vars) {
        Terms t;
        int target = nterms(rng);
        while (static_cast<int>(t.size()) < target) {
            IntVec e(vars);
            for (auto& x : e) x = expo(rng);
            int c = coef(rng);
            if (c != 0) t[e] = Rational(c);
        }
        return t;
    };
    auto multiply = [](const Terms& a, const Terms& b) {
        Terms prod;
        for (const auto& [ea, ca] : a)
            for (const auto& [eb, cb] : b) {
                IntVec e(ea.size());
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                prod[e] += ca * cb;
            }
        for (auto it = prod.begin(); it != prod.end();)
            it = it->second == 0 ? prod.erase(it) : std::next(it);
        return prod;
    };
    auto valuation = [](const Terms& t) {
        std::vector<std::pair<MultiIndex, Rational>> terms;
        for (const auto& [e, c] : t) terms.emplace_back(MultiIndex(e), c);
        return lowest_term_valuation(terms);
    };

    for (int trial = 0; trial < 50; ++trial) {
        Terms s = random_poly(3), t = random_poly(3);
        Terms st = multiply(s, t);
        REQUIRE(!st.empty()); // the lowest terms cannot cancel
        IntVec expect(3);
        MultiIndex vs = valuation(s), vt = valuation(t);
        for (int i = 0; i < 3; ++i) expect[i] = vs.exponents[i] + vt.exponents[i];
        CHECK(valuation(st) == MultiIndex(expect));
    }
}

TEST_CASE("spec worked example for v(st)") {
    auto mi = [](std::initializer_list<long long> e) { return MultiIndex(IntVec(e)); };
    // s = x + y^2 has v(s) = (0,2); t = y - xy has v(t) = (0,1); lowest
    // product term is y^3 at (0,3)
    MultiIndex vs = lowest_term_valuation({{mi({1, 0}), Rational(1)}, {mi({0, 2}), Rational(1)}});
    MultiIndex vt = lowest_term_valuation({{mi({0, 1}), Rational(1)}, {mi({1, 1}), Rational(-1)}});
    CHECK(vs == mi({0, 2}));
    CHECK(vt == mi({0, 1}));
    IntVec sum(2);
    for (int i = 0; i < 2; ++i) sum[i] = vs.exponents[i] + vt.exponents[i];
    CHECK(MultiIndex(sum) == mi({0, 3}));
}

TEST_CASE("cone_of carries the generators") {
    FiniteSemigroup s(2, {{0, 1}, {2, 1}});
    RationalCone c = cone_of(s);
    CHECK(c.ambient == 2);
    REQUIRE(c.generators.size() == 2);
    CHECK(c.generators[1] == pt({"2", "1"}));
}
