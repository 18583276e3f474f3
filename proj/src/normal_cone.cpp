#include "oklab/normal_cone.hpp"

#include <algorithm>
#include <set>

#include "oklab/errors.hpp"
#include "oklab/linalg.hpp"

namespace oklab {

NormalConeDatum::NormalConeDatum(RationalPolytope base, Rational c)
    : base_(std::move(base)), c_(std::move(c)) {
    if (base_.empty() || !base_.full_dimensional())
        throw precondition_error("normal-cone base must be full-dimensional");
    for (const auto& v : base_.vertices())
        for (const auto& x : v)
            if (denominator(x) != 1)
                throw precondition_error("normal-cone base must be an integral polytope");
    if (c_ <= 0) throw precondition_error("c must be positive");

    // The divisor facet: vertices with x_1 = 0 must span dimension n-1.
    std::vector<RatVec> on_wall;
    for (const auto& v : base_.vertices())
        if (v[0] == 0) on_wall.push_back(v);
    if (on_wall.empty() || affine_rank(on_wall) != base_.dim() - 1)
        throw precondition_error("base polytope has no facet on { x_1 = 0 }");
    for (const auto& v : base_.vertices())
        if (v[0] < 0) throw precondition_error("base polytope crosses { x_1 = 0 }");

    if (!shrunken_polytope(*this, c_).full_dimensional())
        throw precondition_error("P_c is not full-dimensional (L - cZ not ample)");
}

RationalPolytope shrunken_polytope(const NormalConeDatum& d, const Rational& a) {
    if (a < 0 || a > d.c()) throw precondition_error("slice parameter outside [0, c]");
    std::vector<HalfSpace> ineqs = d.base().inequalities();
    RatVec e1(static_cast<size_t>(d.base().dim()), Rational(0));
    e1[0] = -1;
    ineqs.push_back({std::move(e1), -a}); // x_1 >= a
    return RationalPolytope(d.base().dim(), std::move(ineqs));
}

WeightFiltration normal_cone_filtration(const NormalConeDatum& d, long long degree_bound) {
    if (degree_bound < 1) throw precondition_error("degree bound must be >= 1");
    std::map<long long, std::map<IntVec, long long>> weights;
    for (long long k = 1; k <= degree_bound; ++k) {
        Rational ck = d.c() * k;
        if (denominator(ck) != 1) continue; // degree skipped: c*k not integral
        long long ckll = to_ll(numerator(ck));
        auto& table = weights[k];
        for (const auto& alpha : lattice_points(dilate(d.base(), Rational(k))))
            table[alpha] = std::min<long long>(alpha[0] - ckll, 0);
    }
    if (weights.empty())
        throw precondition_error("no degree <= bound has c*k integral");
    return WeightFiltration(d.base(), std::move(weights), d.c());
}

ConcavePLFunction normal_cone_transform(const NormalConeDatum& d) {
    const int n = d.base().dim();
    RatVec e1(static_cast<size_t>(n), Rational(0));
    e1[0] = 1;
    std::vector<AffineForm> pieces{{std::move(e1), -d.c()}, {RatVec(static_cast<size_t>(n), Rational(0)), Rational(0)}};
    return ConcavePLFunction(d.base(), std::move(pieces));
}

MeasureOnR normal_cone_pushforward(const NormalConeDatum& d) {
    const int n = d.base().dim();

    // Critical cut heights: vertex first coordinates within [0, c], plus the
    // endpoints. vol(P_a) is a single polynomial of degree <= n between
    // consecutive criticals.
    std::set<Rational> crit{Rational(0), d.c()};
    for (const auto& v : d.base().vertices())
        if (v[0] > 0 && v[0] < d.c()) crit.insert(v[0]);
    std::vector<Rational> cuts(crit.begin(), crit.end());

    auto vol_slice = [&](const Rational& a) { return volume(shrunken_polytope(d, a)); };

    std::vector<std::pair<Rational, Rational>> atoms;
    Rational top = vol_slice(d.c());
    if (top > 0) atoms.emplace_back(Rational(0), top);

    std::vector<DensityPiece> pieces;
    for (size_t j = 0; j + 1 < cuts.size(); ++j) {
        std::vector<std::pair<Rational, Rational>> nodes;
        for (int i = 0; i <= n; ++i) {
            Rational a = cuts[j] + (cuts[j + 1] - cuts[j]) * Rational(i) / Rational(n);
            nodes.emplace_back(a, vol_slice(a));
        }
        Poly vol_a = Poly::lagrange(nodes);
        // density(x) = -d/da vol(P_a) at a = x + c, on x in [cut_j - c, cut_{j+1} - c]
        Poly shifted; // vol_a'(x + c)
        {
            Poly deriv = vol_a.derivative();
            Poly x_plus_c(RatVec{d.c(), Rational(1)});
            Poly acc = Poly::constant(Rational(0)), power = Poly::constant(Rational(1));
            for (const auto& coef : deriv.coeffs()) {
                acc = acc + power.scaled(coef);
                power = power * x_plus_c;
            }
            shifted = acc;
        }
        pieces.push_back({cuts[j] - d.c(), cuts[j + 1] - d.c(), shifted.scaled(Rational(-1))});
    }
    return MeasureOnR(std::move(atoms), std::move(pieces));
}

bool slice_check(const NormalConeDatum& d, const Rational& a) {
    if (a < 0 || a > d.c()) throw precondition_error("slice parameter outside [0, c]");
    return superlevel_set(normal_cone_transform(d), a - d.c()) == shrunken_polytope(d, a);
}

} // namespace oklab
