#include "oklab/measure.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "oklab/errors.hpp"

namespace oklab {

MeasureOnR::MeasureOnR(std::vector<std::pair<Rational, Rational>> atoms,
                       std::vector<DensityPiece> pieces) {
    std::map<Rational, Rational> merged;
    for (auto& [loc, mass] : atoms) {
        if (mass < 0) throw precondition_error("negative atom mass");
        if (mass > 0) merged[loc] += mass;
    }
    atoms_.assign(merged.begin(), merged.end());

    for (auto& p : pieces) {
        if (p.lo > p.hi) throw precondition_error("density interval reversed");
        if (p.lo == p.hi || p.density.is_zero()) continue;
        if (!poly_nonneg_on(p.density, p.lo, p.hi))
            throw precondition_error("density negative on its interval");
        pieces_.push_back(std::move(p));
    }
    std::sort(pieces_.begin(), pieces_.end(),
              [](const DensityPiece& a, const DensityPiece& b) { return a.lo < b.lo; });
    for (size_t i = 0; i + 1 < pieces_.size(); ++i)
        if (pieces_[i].hi > pieces_[i + 1].lo)
            throw precondition_error("density intervals overlap");
}

Rational MeasureOnR::total_mass() const {
    Rational m = 0;
    for (const auto& [loc, mass] : atoms_) m += mass;
    for (const auto& p : pieces_) m += p.density.integral(p.lo, p.hi);
    return m;
}

Rational MeasureOnR::atom_mass_at(const Rational& t) const {
    for (const auto& [loc, mass] : atoms_) {
        if (loc == t) return mass;
        if (loc > t) break;
    }
    return 0;
}

MeasureOnR MeasureOnR::scaled_mass(const Rational& s) const {
    std::vector<std::pair<Rational, Rational>> atoms = atoms_;
    for (auto& [loc, mass] : atoms) mass *= s;
    std::vector<DensityPiece> pieces = pieces_;
    for (auto& p : pieces) p.density = p.density.scaled(s);
    return MeasureOnR(std::move(atoms), std::move(pieces));
}

namespace {

// Density of m as a single polynomial on an interval that does not cross
// any piece boundary; the zero polynomial off-support.
Poly density_on(const MeasureOnR& m, const Rational& lo, const Rational& hi) {
    for (const auto& p : m.pieces())
        if (p.lo <= lo && hi <= p.hi) return p.density;
    return Poly();
}

std::vector<Rational> refinement_points(const MeasureOnR& m1, const MeasureOnR& m2) {
    std::set<Rational> pts;
    for (const auto* m : {&m1, &m2}) {
        for (const auto& [loc, mass] : m->atoms()) pts.insert(loc);
        for (const auto& p : m->pieces()) {
            pts.insert(p.lo);
            pts.insert(p.hi);
        }
    }
    return {pts.begin(), pts.end()};
}

} // namespace

bool MeasureOnR::operator==(const MeasureOnR& other) const {
    if (atoms_ != other.atoms_) return false;
    auto pts = refinement_points(*this, other);
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        if (density_on(*this, pts[i], pts[i + 1]) != density_on(other, pts[i], pts[i + 1]))
            return false;
    return true;
}

MeasureOnR pushforward_lebesgue(const ConcavePLFunction& g) {
    const RationalPolytope& p = g.domain();
    if (!p.full_dimensional()) throw precondition_error("pushforward needs a full-dimensional domain");
    const int n = p.dim();

    std::set<Rational> values;
    for (const auto& v : g.subdivision_vertices()) values.insert(g.value(v));
    std::vector<Rational> ts(values.begin(), values.end());

    std::vector<std::pair<Rational, Rational>> atoms;
    std::vector<DensityPiece> pieces;
    Rational top_mass = volume(superlevel_set(g, ts.back()));
    if (top_mass > 0) atoms.emplace_back(ts.back(), top_mass);

    for (size_t j = 0; j + 1 < ts.size(); ++j) {
        std::vector<std::pair<Rational, Rational>> nodes;
        for (int i = 0; i <= n; ++i) {
            Rational t = ts[j] + (ts[j + 1] - ts[j]) * Rational(i) / Rational(n);
            nodes.emplace_back(t, volume(superlevel_set(g, t)));
        }
        Poly tail_poly = Poly::lagrange(nodes);
        pieces.push_back({ts[j], ts[j + 1], tail_poly.derivative().scaled(Rational(-1))});
    }
    return MeasureOnR(std::move(atoms), std::move(pieces));
}

Rational tail(const MeasureOnR& m, const Rational& t) {
    Rational s = 0;
    for (const auto& [loc, mass] : m.atoms())
        if (loc >= t) s += mass;
    for (const auto& p : m.pieces()) {
        if (p.hi <= t) continue;
        s += p.density.integral(std::max(p.lo, t), p.hi);
    }
    return s;
}

Rational moment(const MeasureOnR& m, int r) {
    Rational s = 0;
    for (const auto& [loc, mass] : m.atoms()) {
        Rational locr = 1;
        for (int i = 0; i < r; ++i) locr *= loc;
        s += locr * mass;
    }
    RatVec xr(static_cast<size_t>(r) + 1, Rational(0));
    xr.back() = 1;
    Poly xpow{std::move(xr)};
    for (const auto& p : m.pieces()) s += (xpow * p.density).integral(p.lo, p.hi);
    return s;
}

Rational kolmogorov_distance(const MeasureOnR& m1, const MeasureOnR& m2) {
    auto pts = refinement_points(m1, m2);
    if (pts.empty()) return 0;

    Rational best = 0;
    auto consider = [&](const Rational& v) { best = std::max(best, abs_rat(v)); };

    for (const auto& t : pts) {
        Rational d = tail(m1, t) - tail(m2, t);
        consider(d);
        consider(d - (m1.atom_mass_at(t) - m2.atom_mass_at(t))); // right limit
    }
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        Poly h = density_on(m1, pts[i], pts[i + 1]) - density_on(m2, pts[i], pts[i + 1]);
        if (h.degree() <= 0) continue; // tail difference monotone or affine on the gap
        if (h.degree() >= 2)
            throw precondition_error(
                "kolmogorov_distance: interior extrema need density difference of degree <= 1");
        Rational root = -h.coeffs()[0] / h.coeffs()[1];
        if (root <= pts[i] || root >= pts[i + 1]) continue;
        // D(root) via D(right endpoint) plus the integral of h back to root.
        Rational d_right = tail(m1, pts[i + 1]) - tail(m2, pts[i + 1]);
        consider(d_right + h.integral(root, pts[i + 1]));
    }
    return best;
}

bool dh_structure_check(const MeasureOnR& m, int n) {
    for (const auto& p : m.pieces())
        if (p.density.degree() > n - 1) return false;
    for (size_t i = 0; i + 1 < m.atoms().size(); ++i)
        if (m.atoms()[i].first >= m.atoms()[i + 1].first) return false;
    return true;
}

} // namespace oklab
