#include "oklab/filtration.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

#include "oklab/errors.hpp"
#include "oklab/linalg.hpp"

namespace oklab {

WeightFiltration::WeightFiltration(RationalPolytope base,
                                   std::map<long long, std::map<IntVec, long long>> weights,
                                   std::optional<Rational> linear_bound)
    : base_(std::move(base)), weights_(std::move(weights)) {
    if (base_.empty()) throw precondition_error("filtration base polytope is empty");
    Rational empirical = 0;
    for (const auto& [k, table] : weights_) {
        if (k < 1) throw precondition_error("filtration degrees must be positive");
        auto pts = lattice_points(dilate(base_, Rational(k)));
        if (pts.size() != table.size())
            throw precondition_error("degree " + std::to_string(k) +
                                     " weight table does not cover the lattice points of kP");
        for (const auto& alpha : pts) {
            auto it = table.find(alpha);
            if (it == table.end())
                throw precondition_error("degree " + std::to_string(k) +
                                         " weight table misses a lattice point of kP");
            Rational ratio = Rational(it->second < 0 ? -it->second : it->second, k);
            empirical = std::max(empirical, ratio);
        }
    }
    linear_bound_ = linear_bound.value_or(empirical);
}

std::vector<long long> WeightFiltration::degrees() const {
    std::vector<long long> ks;
    for (const auto& [k, table] : weights_) ks.push_back(k);
    return ks;
}

long long WeightFiltration::degree_bound() const {
    return weights_.empty() ? 0 : weights_.rbegin()->first;
}

const std::map<IntVec, long long>& WeightFiltration::level(long long k) const {
    auto it = weights_.find(k);
    if (it == weights_.end())
        throw precondition_error("degree " + std::to_string(k) + " not materialized");
    return it->second;
}

long long dim_filtration(const WeightFiltration& f, long long k, const Rational& t) {
    Int threshold = ceil_rat(t); // w >= t iff w >= ceil(t) for integer w
    long long count = 0;
    for (const auto& [alpha, w] : f.level(k))
        if (Int(w) >= threshold) ++count;
    return count;
}

MeasureOnR nu_measure(const WeightFiltration& f, long long k) {
    const int n = f.base().dim();
    Rational unit = 1;
    for (int i = 0; i < n; ++i) unit /= k;
    std::vector<std::pair<Rational, Rational>> atoms;
    for (const auto& [alpha, w] : f.level(k)) atoms.emplace_back(Rational(w, k), unit);
    return MeasureOnR(std::move(atoms), {});
}

GkFunction gk_function(const WeightFiltration& f, long long k) { return {k, f.level(k)}; }

/* ------------------------------------------------------------------------
 * Upper concave envelope of a sampled cloud
 * ------------------------------------------------------------------------ */

namespace {

// Min-of-affine representation of the upper concave envelope of the points
// (site_i, value_i). Sites may span a lower-dimensional flat; the envelope
// lives on conv(sites).
ConcavePLFunction upper_envelope(int n, const std::vector<std::pair<RatVec, Rational>>& cloud) {
    // Per site, only the maximal value can lie on an upper facet.
    std::map<RatVec, Rational> best;
    for (const auto& [site, value] : cloud) {
        auto [it, inserted] = best.emplace(site, value);
        if (!inserted && value > it->second) it->second = value;
    }
    std::vector<RatVec> sites;
    RatVec values;
    for (const auto& [site, value] : best) {
        sites.push_back(site);
        values.push_back(value);
    }

    RationalPolytope domain = convex_hull(n, sites);
    AffineReduction red = affine_reduce(sites);
    const int d = red.d;

    std::vector<AffineForm> reduced_pieces; // affine forms in the d reduced coordinates
    if (d == 0) {
        Rational m = values[0];
        for (const auto& v : values) m = std::max(m, v);
        reduced_pieces.push_back({RatVec{}, m});
    } else {
        std::vector<RatVec> lifted;
        for (size_t i = 0; i < sites.size(); ++i) {
            RatVec u = red.reduce(sites[i]);
            u.push_back(values[i]);
            lifted.push_back(std::move(u));
        }
        if (affine_rank(lifted) == d) {
            // Every sample lies on one affine graph; fit it through d+1
            // affinely independent sites.
            RatMat a;
            RatVec rhs;
            for (int idx : red.independent_points) {
                RatVec row = red.reduce(sites[static_cast<size_t>(idx)]);
                row.push_back(Rational(1));
                a.push_back(std::move(row));
                rhs.push_back(values[static_cast<size_t>(idx)]);
            }
            auto sol = solve_linear(std::move(a), std::move(rhs));
            assert(sol);
            Rational b = sol->back();
            sol->pop_back();
            reduced_pieces.push_back({std::move(*sol), std::move(b)});
        } else {
            for (const auto& h : hull_facets(lifted)) {
                const Rational& ay = h.a.back();
                if (ay <= 0) continue; // not an upper facet
                RatVec coeff(static_cast<size_t>(d));
                for (int i = 0; i < d; ++i) coeff[static_cast<size_t>(i)] = -h.a[static_cast<size_t>(i)] / ay;
                reduced_pieces.push_back({std::move(coeff), h.b / ay});
            }
        }
    }

    // Map u = L (x - p0) back to ambient coordinates.
    std::vector<AffineForm> pieces;
    for (const auto& rp : reduced_pieces) {
        RatVec ax(static_cast<size_t>(n), Rational(0));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < n; ++j) ax[static_cast<size_t>(j)] += rp.a[static_cast<size_t>(i)] * red.lmap[static_cast<size_t>(i)][static_cast<size_t>(j)];
        Rational bx = rp.b - dot(ax, red.p0);
        pieces.push_back({std::move(ax), std::move(bx)});
    }
    return ConcavePLFunction(std::move(domain), std::move(pieces));
}

} // namespace

EnvelopeEstimate concave_transform_estimate(const WeightFiltration& f,
                                            const std::vector<long long>& k_list) {
    if (k_list.empty()) throw precondition_error("empty degree sample");
    std::map<RatVec, std::set<Rational>> samples;
    for (long long k : k_list)
        for (const auto& [alpha, w] : f.level(k)) {
            RatVec site(alpha.size());
            for (size_t i = 0; i < alpha.size(); ++i) site[i] = Rational(alpha[i], k);
            samples[site].insert(Rational(w, k));
        }
    std::vector<std::pair<RatVec, Rational>> cloud;
    for (const auto& [site, vals] : samples)
        for (const auto& v : vals) cloud.emplace_back(site, v);
    return {upper_envelope(f.base().dim(), cloud), std::move(cloud)};
}

std::string AdmissibilityReport::describe() const {
    if (pass) return "admissible";
    std::ostringstream os;
    auto vec = [](const IntVec& v) {
        std::string s = "(";
        for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + ")";
    };
    if (kind == Violation::Superadditivity)
        os << "superadditivity violated at k=" << k << " m=" << m << " alpha=" << vec(alpha)
           << " beta=" << vec(beta);
    else
        os << "linear weight bound violated at k=" << k << " alpha=" << vec(alpha);
    return os.str();
}

AdmissibilityReport check_admissible(const WeightFiltration& f, long long k_max) {
    if (k_max > f.degree_bound())
        throw precondition_error("k_max exceeds the materialized degree bound");
    std::vector<long long> ks;
    for (long long k : f.degrees())
        if (k <= k_max) ks.push_back(k);

    for (long long k : ks) {
        for (const auto& [alpha, w] : f.level(k)) {
            if (abs_rat(Rational(w)) > f.linear_bound() * k) {
                AdmissibilityReport r;
                r.pass = false;
                r.kind = AdmissibilityReport::Violation::LinearBound;
                r.k = k;
                r.alpha = alpha;
                return r;
            }
        }
    }

    for (long long k : ks)
        for (long long m : ks) {
            if (m < k || k + m > k_max || !f.materialized(k + m)) continue;
            const auto& high = f.level(k + m);
            for (const auto& [alpha, wa] : f.level(k))
                for (const auto& [beta, wb] : f.level(m)) {
                    IntVec sum(alpha.size());
                    for (size_t i = 0; i < sum.size(); ++i) sum[i] = alpha[i] + beta[i];
                    auto it = high.find(sum);
                    assert(it != high.end()); // alpha+beta lies in (k+m)P by convexity
                    if (it->second < wa + wb) {
                        AdmissibilityReport r;
                        r.pass = false;
                        r.kind = AdmissibilityReport::Violation::Superadditivity;
                        r.k = k;
                        r.m = m;
                        r.alpha = alpha;
                        r.beta = beta;
                        return r;
                    }
                }
        }
    return {};
}

} // namespace oklab
