#include "oklab/toric.hpp"

#include <map>

#include "oklab/errors.hpp"

namespace oklab {

namespace {

bool integral_point(const RatVec& v) {
    for (const auto& x : v)
        if (denominator(x) != 1) return false;
    return true;
}

} // namespace

ToricTestConfiguration::ToricTestConfiguration(ConcavePLFunction g) : g_(std::move(g)) {
    for (const auto& v : g_.domain().vertices())
        if (!integral_point(v))
            throw precondition_error("toric test configuration needs an integral base polytope");
    if (g_.min_on_domain() < 0) throw precondition_error("g negative somewhere on P");
}

long long ToricTestConfiguration::integrality_scale() const {
    RationalPolytope roof = roof_polytope(*this);
    Int scale = 1;
    for (const auto& v : roof.vertices())
        for (const auto& x : v) scale = boost::multiprecision::lcm(scale, denominator(x));
    return to_ll(scale);
}

RationalPolytope roof_polytope(const ToricTestConfiguration& t) {
    const ConcavePLFunction& g = t.transform_datum();
    const int n = g.domain().dim();
    std::vector<HalfSpace> ineqs;
    for (const auto& h : g.domain().inequalities()) {
        RatVec a = h.a;
        a.push_back(Rational(0));
        ineqs.push_back({std::move(a), h.b});
    }
    RatVec down(static_cast<size_t>(n) + 1, Rational(0));
    down.back() = -1;
    ineqs.push_back({std::move(down), Rational(0)}); // y >= 0
    for (const auto& p : g.pieces()) {
        RatVec a(static_cast<size_t>(n) + 1);
        for (int i = 0; i < n; ++i) a[static_cast<size_t>(i)] = -p.a[static_cast<size_t>(i)];
        a.back() = 1;
        ineqs.push_back({std::move(a), p.b}); // y <= a.x + b
    }
    return RationalPolytope(n + 1, std::move(ineqs));
}

WeightMeasurePair weight_measure(const ToricTestConfiguration& t, long long k) {
    if (k < 1) throw precondition_error("weight measure needs k >= 1");
    const ConcavePLFunction& g = t.transform_datum();
    const int n = g.domain().dim();

    std::map<Int, long long> counts;
    RatVec x(static_cast<size_t>(n));
    for (const auto& alpha : lattice_points(dilate(g.domain(), Rational(k)))) {
        for (int i = 0; i < n; ++i) x[static_cast<size_t>(i)] = Rational(alpha[static_cast<size_t>(i)], k);
        ++counts[floor_rat(g.value(x) * k)];
    }

    Rational unit = 1;
    for (int i = 0; i < n; ++i) unit /= k;
    std::vector<std::pair<Rational, Rational>> raw, normalized;
    for (const auto& [eta, count] : counts) {
        raw.emplace_back(Rational(eta), Rational(count));
        normalized.emplace_back(Rational(eta) / k, unit * count);
    }
    return {MeasureOnR(std::move(raw), {}), MeasureOnR(std::move(normalized), {})};
}

WeightFiltration toric_filtration(const ToricTestConfiguration& t, long long degree_bound) {
    if (degree_bound < 1) throw precondition_error("degree bound must be >= 1");
    const ConcavePLFunction& g = t.transform_datum();
    const int n = g.domain().dim();

    std::map<long long, std::map<IntVec, long long>> weights;
    RatVec x(static_cast<size_t>(n));
    for (long long k = 1; k <= degree_bound; ++k) {
        auto& table = weights[k];
        for (const auto& alpha : lattice_points(dilate(g.domain(), Rational(k)))) {
            for (int i = 0; i < n; ++i) x[static_cast<size_t>(i)] = Rational(alpha[static_cast<size_t>(i)], k);
            table[alpha] = to_ll(floor_rat(g.value(x) * k));
        }
    }
    Rational bound = std::max(abs_rat(g.min_on_domain()), abs_rat(g.max_on_domain()));
    return WeightFiltration(g.domain(), std::move(weights), bound);
}

F0Result f0_invariant(const ToricTestConfiguration& t, const std::vector<long long>& k_list) {
    const ConcavePLFunction& g = t.transform_datum();
    Rational vol = volume(g.domain());
    if (vol == 0) throw precondition_error("degenerate base polytope");
    F0Result res;
    res.f0 = integrate_pl(g) / vol;
    for (long long k : k_list) {
        MeasureOnR raw = weight_measure(t, k).raw;
        Rational wk = moment(raw, 1);
        Rational dk = raw.total_mass();
        res.ratio_table.emplace_back(k, wk / (dk * k));
    }
    return res;
}

} // namespace oklab
