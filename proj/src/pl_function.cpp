#include "oklab/pl_function.hpp"

#include <algorithm>
#include <set>

#include "oklab/errors.hpp"
#include "oklab/linalg.hpp"

namespace oklab {

ConcavePLFunction::ConcavePLFunction(RationalPolytope domain, std::vector<AffineForm> pieces)
    : domain_(std::move(domain)), pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw precondition_error("piecewise function needs at least one piece");
    for (const auto& p : pieces_)
        if (static_cast<int>(p.a.size()) != domain_.dim())
            throw precondition_error("piece dimension mismatch");
    if (domain_.empty()) throw precondition_error("piecewise function needs a nonempty domain");
}

Rational ConcavePLFunction::value(const RatVec& x) const {
    Rational v = pieces_[0].value(x);
    for (size_t i = 1; i < pieces_.size(); ++i) v = std::min(v, pieces_[i].value(x));
    return v;
}

Rational ConcavePLFunction::min_on_domain() const {
    Rational m = value(domain_.vertices()[0]);
    for (const auto& v : domain_.vertices()) m = std::min(m, value(v));
    return m;
}

Rational ConcavePLFunction::max_on_domain() const {
    auto verts = subdivision_vertices();
    Rational m = value(verts[0]);
    for (const auto& v : verts) m = std::max(m, value(v));
    return m;
}

RationalPolytope ConcavePLFunction::cell(size_t i) const {
    std::vector<HalfSpace> ineqs = domain_.inequalities();
    for (size_t j = 0; j < pieces_.size(); ++j) {
        if (j == i) continue;
        // piece_i(x) <= piece_j(x)
        RatVec a(domain_.dim());
        for (int k = 0; k < domain_.dim(); ++k) a[k] = pieces_[i].a[k] - pieces_[j].a[k];
        ineqs.push_back({std::move(a), pieces_[j].b - pieces_[i].b});
    }
    return RationalPolytope(domain_.dim(), std::move(ineqs));
}

std::vector<RatVec> ConcavePLFunction::subdivision_vertices() const {
    std::set<RatVec> verts;
    for (size_t i = 0; i < pieces_.size(); ++i) {
        auto c = cell(i);
        verts.insert(c.vertices().begin(), c.vertices().end());
    }
    return {verts.begin(), verts.end()};
}

RationalPolytope superlevel_set(const ConcavePLFunction& g, const Rational& t) {
    std::vector<HalfSpace> ineqs = g.domain().inequalities();
    for (const auto& p : g.pieces()) {
        RatVec a(p.a.size());
        for (size_t k = 0; k < a.size(); ++k) a[k] = -p.a[k];
        ineqs.push_back({std::move(a), p.b - t}); // a.x + b >= t
    }
    return RationalPolytope(g.domain().dim(), std::move(ineqs));
}

Rational integrate_pl(const ConcavePLFunction& g) {
    const int n = g.domain().dim();
    Int fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    Rational total = 0;
    for (size_t i = 0; i < g.pieces().size(); ++i) {
        RationalPolytope c = g.cell(i);
        for (const auto& simplex : triangulate(c)) {
            RatMat m(n, RatVec(n));
            for (int r = 0; r < n; ++r)
                for (int j = 0; j < n; ++j) m[r][j] = simplex[r + 1][j] - simplex[0][j];
            Rational vol = abs_rat(determinant(std::move(m))) / Rational(fact);
            Rational mean = 0;
            for (const auto& v : simplex) mean += g.pieces()[i].value(v);
            total += vol * mean / Rational(n + 1);
        }
    }
    return total;
}

} // namespace oklab
