#include "oklab/polytope.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <thread>

#include "oklab/errors.hpp"
#include "oklab/linalg.hpp"
#include "oklab/lp.hpp"

namespace oklab {

namespace {

using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

// Scale (a, b) to coprime integers with the same solution set.
HalfSpace canonicalize(HalfSpace h) {
    Int mult = denominator(h.b);
    for (const auto& x : h.a) mult = lcm(mult, denominator(x));
    Int g = abs(numerator(h.b) * (mult / denominator(h.b)));
    for (auto& x : h.a) {
        x *= mult;
        g = gcd(g, abs(numerator(x)));
    }
    h.b *= mult;
    if (g > 1) {
        for (auto& x : h.a) x /= g;
        h.b /= g;
    }
    return h;
}

bool is_zero_row(const RatVec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

std::vector<HalfSpace> canonical_empty(int dim) {
    return {HalfSpace{RatVec(dim, Rational(0)), Rational(-1)}};
}

void split_lhs_rhs(const std::vector<HalfSpace>& hs, std::vector<RatVec>& a, RatVec& b) {
    a.clear();
    b.clear();
    for (const auto& h : hs) {
        a.push_back(h.a);
        b.push_back(h.b);
    }
}

} // namespace

RationalPolytope::RationalPolytope(int dim, std::vector<HalfSpace> ineqs) : dim_(dim) {
    if (dim < 1) throw precondition_error("ambient dimension must be >= 1");
    for (const auto& h : ineqs)
        if (static_cast<int>(h.a.size()) != dim)
            throw precondition_error("inequality dimension mismatch");

    bool infeasible = false;
    std::vector<HalfSpace> kept;
    for (auto& h : ineqs) {
        HalfSpace c = canonicalize(std::move(h));
        if (is_zero_row(c.a)) {
            if (c.b < 0) infeasible = true; // 0 <= b with b < 0
            continue;                       // tautology otherwise
        }
        kept.push_back(std::move(c));
    }
    std::sort(kept.begin(), kept.end(), [](const HalfSpace& x, const HalfSpace& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    });
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());

    auto become_empty = [&] {
        empty_ = true;
        ineqs_ = canonical_empty(dim_);
    };
    if (infeasible) {
        become_empty();
        return;
    }

    std::vector<RatVec> lhs;
    RatVec rhs;
    split_lhs_rhs(kept, lhs, rhs);
    if (lp_maximize(lhs, rhs, RatVec(dim, Rational(0))).status == LpStatus::Infeasible) {
        become_empty();
        return;
    }

    for (int i = 0; i < dim; ++i) {
        for (int sgn : {1, -1}) {
            RatVec obj(dim, Rational(0));
            obj[i] = sgn;
            if (lp_maximize(lhs, rhs, obj).status == LpStatus::Unbounded)
                throw precondition_error("unbounded halfspace system");
        }
    }

    // Redundancy removal: inequality i is redundant iff max a_i.x over the
    // remaining system stays <= b_i.
    for (size_t i = 0; i < kept.size();) {
        std::vector<HalfSpace> others;
        others.reserve(kept.size() - 1);
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        split_lhs_rhs(others, lhs, rhs);
        LpResult r = lp_maximize(lhs, rhs, kept[i].a);
        if (r.status == LpStatus::Optimal && r.value <= kept[i].b)
            kept.erase(kept.begin() + static_cast<long>(i));
        else
            ++i;
    }
    ineqs_ = std::move(kept);

    // Vertex enumeration over n-subsets of tight hyperplanes.
    const size_t m = ineqs_.size();
    std::set<RatVec> verts;
    std::vector<size_t> comb(dim_);
    for (int i = 0; i < dim_; ++i) comb[i] = static_cast<size_t>(i);
    if (m >= static_cast<size_t>(dim_)) {
        for (;;) {
            RatMat a(dim_);
            RatVec b(dim_);
            for (int i = 0; i < dim_; ++i) {
                a[i] = ineqs_[comb[i]].a;
                b[i] = ineqs_[comb[i]].b;
            }
            if (auto x = solve_linear(std::move(a), std::move(b)); x && contains(*x))
                verts.insert(std::move(*x));
            // next combination
            int i = dim_ - 1;
            while (i >= 0 && comb[i] == m - static_cast<size_t>(dim_ - i)) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < dim_; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    vertices_.assign(verts.begin(), verts.end());
    full_dim_ = affine_rank(vertices_) == dim_;
}

bool RationalPolytope::contains(const RatVec& x) const {
    for (const auto& h : ineqs_)
        if (dot(h.a, x) > h.b) return false;
    return true;
}

bool RationalPolytope::contains(const RationalPolytope& other) const {
    for (const auto& v : other.vertices_)
        if (!contains(v)) return false;
    return true;
}

bool RationalPolytope::operator==(const RationalPolytope& other) const {
    if (dim_ != other.dim_) return false;
    if (empty_ || other.empty_) return empty_ == other.empty_;
    return contains(other) && other.contains(*this);
}

std::pair<RatVec, RatVec> RationalPolytope::bounding_box() const {
    if (empty_) throw precondition_error("bounding box of empty polytope");
    RatVec lo = vertices_[0], hi = vertices_[0];
    for (const auto& v : vertices_)
        for (int i = 0; i < dim_; ++i) {
            if (v[i] < lo[i]) lo[i] = v[i];
            if (v[i] > hi[i]) hi[i] = v[i];
        }
    return {lo, hi};
}

/* ------------------------------------------------------------------------
 * Triangulation and volume
 * ------------------------------------------------------------------------
 * Pulling triangulation over the face lattice: every face is identified by
 * its vertex-index set, facets of a face are found by intersecting with the
 * tight sets of the global inequalities, and each face is coned from its
 * lexicographically smallest vertex. Deterministic, so sub-triangulations
 * of shared faces agree. */

namespace {

struct FaceTriangulator {
    const RationalPolytope& p;
    const std::vector<RatVec>& verts;
    std::vector<std::vector<char>> tight; // [ineq][vertex]
    std::map<std::vector<int>, std::vector<std::vector<int>>> memo;

    explicit FaceTriangulator(const RationalPolytope& poly) : p(poly), verts(poly.vertices()) {
        tight.assign(p.inequalities().size(), std::vector<char>(verts.size(), 0));
        for (size_t j = 0; j < p.inequalities().size(); ++j)
            for (size_t v = 0; v < verts.size(); ++v)
                tight[j][v] = dot(p.inequalities()[j].a, verts[v]) == p.inequalities()[j].b;
    }

    int face_rank(const std::vector<int>& face) const {
        std::vector<RatVec> pts;
        pts.reserve(face.size());
        for (int v : face) pts.push_back(verts[v]);
        return affine_rank(pts);
    }

    const std::vector<std::vector<int>>& simplices(const std::vector<int>& face, int d) {
        auto it = memo.find(face);
        if (it != memo.end()) return it->second;
        std::vector<std::vector<int>> out;
        if (d == 0) {
            out.push_back({face[0]});
        } else {
            int apex = face[0]; // vertices are lex-sorted, so index order is lex order
            std::set<std::vector<int>> facets;
            for (size_t j = 0; j < tight.size(); ++j) {
                std::vector<int> w;
                for (int v : face)
                    if (tight[j][v]) w.push_back(v);
                if (w.size() < static_cast<size_t>(d) || w.size() == face.size()) continue;
                if (face_rank(w) == d - 1) facets.insert(std::move(w));
            }
            for (const auto& w : facets) {
                if (std::binary_search(w.begin(), w.end(), apex)) continue;
                for (const auto& s : simplices(w, d - 1)) {
                    std::vector<int> sim = s;
                    sim.push_back(apex);
                    out.push_back(std::move(sim));
                }
            }
        }
        return memo.emplace(face, std::move(out)).first->second;
    }
};

} // namespace

std::vector<std::vector<RatVec>> triangulate(const RationalPolytope& p) {
    if (!p.full_dimensional()) return {};
    FaceTriangulator tri(p);
    std::vector<int> all(p.vertices().size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    std::vector<std::vector<RatVec>> out;
    for (const auto& s : tri.simplices(all, p.dim())) {
        std::vector<RatVec> simplex;
        simplex.reserve(s.size());
        for (int v : s) simplex.push_back(p.vertices()[v]);
        out.push_back(std::move(simplex));
    }
    return out;
}

Rational volume(const RationalPolytope& p) {
    if (!p.full_dimensional()) return 0;
    const int n = p.dim();
    Int fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    Rational total = 0;
    for (const auto& s : triangulate(p)) {
        RatMat m(n, RatVec(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = s[i + 1][j] - s[0][j];
        total += abs_rat(determinant(std::move(m)));
    }
    return total / Rational(fact);
}

RationalPolytope dilate(const RationalPolytope& p, const Rational& k) {
    if (k <= 0) throw precondition_error("dilation factor must be positive");
    std::vector<HalfSpace> ineqs = p.inequalities();
    if (!p.empty())
        for (auto& h : ineqs) h.b *= k;
    return RationalPolytope(p.dim(), std::move(ineqs));
}

RationalPolytope minkowski_sum(const RationalPolytope& p, const RationalPolytope& q) {
    if (p.dim() != q.dim()) throw precondition_error("minkowski sum dimension mismatch");
    std::vector<RatVec> sums;
    for (const auto& u : p.vertices())
        for (const auto& v : q.vertices()) {
            RatVec s(u.size());
            for (size_t i = 0; i < s.size(); ++i) s[i] = u[i] + v[i];
            sums.push_back(std::move(s));
        }
    return convex_hull(p.dim(), sums);
}

/* ------------------------------------------------------------------------
 * Lattice points
 * ------------------------------------------------------------------------ */

namespace {

// Enumerate integer points with first coordinate in [first_lo, first_hi],
// remaining coordinates over the box, filtered by exact membership.
void scan_slab(const RationalPolytope& p, long long first_lo, long long first_hi,
               const std::vector<long long>& lo, const std::vector<long long>& hi,
               std::vector<IntVec>& out) {
    const int n = p.dim();
    IntVec cur(n);
    RatVec x(n);
    for (long long f = first_lo; f <= first_hi; ++f) {
        cur[0] = f;
        for (int i = 1; i < n; ++i) cur[i] = lo[i];
        for (;;) {
            for (int i = 0; i < n; ++i) x[i] = cur[i];
            if (p.contains(x)) out.push_back(cur);
            int i = n - 1;
            while (i >= 1 && cur[i] == hi[i]) {
                cur[i] = lo[i];
                --i;
            }
            if (i < 1) break;
            ++cur[i];
        }
    }
}

} // namespace

unsigned max_threads() {
    if (const char* env = std::getenv("OKOUNKOV_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

std::vector<IntVec> lattice_points(const RationalPolytope& p) {
    if (p.empty()) return {};
    auto [rlo, rhi] = p.bounding_box();
    const int n = p.dim();
    std::vector<long long> lo(n), hi(n);
    Int cells = 1;
    for (int i = 0; i < n; ++i) {
        lo[i] = to_ll(ceil_rat(rlo[i]));
        hi[i] = to_ll(floor_rat(rhi[i]));
        if (lo[i] > hi[i]) return {};
        cells *= Int(hi[i] - lo[i] + 1);
    }

    const unsigned threads = max_threads();
    const long long span = hi[0] - lo[0] + 1;
    if (threads <= 1 || cells < 50000 || span < 2) {
        std::vector<IntVec> out;
        scan_slab(p, lo[0], hi[0], lo, hi, out);
        return out;
    }

    // Partition the first coordinate into contiguous slabs; concatenation in
    // slab order keeps the global result lexicographically sorted.
    const long long nslabs = std::min<long long>(span, threads);
    std::vector<std::vector<IntVec>> parts(static_cast<size_t>(nslabs));
    std::vector<std::thread> workers;
    for (long long s = 0; s < nslabs; ++s) {
        long long a = lo[0] + span * s / nslabs;
        long long b = lo[0] + span * (s + 1) / nslabs - 1;
        workers.emplace_back([&, s, a, b] { scan_slab(p, a, b, lo, hi, parts[static_cast<size_t>(s)]); });
    }
    for (auto& w : workers) w.join();
    std::vector<IntVec> out;
    for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
    return out;
}

/* ------------------------------------------------------------------------
 * Convex hull
 * ------------------------------------------------------------------------
 * Beneath-beyond with strict visibility over exact rationals. Coplanar
 * degeneracies only produce duplicate supporting hyperplanes, which the
 * polytope constructor removes again; a fixed interior reference point
 * orients every facet. */

namespace {

struct BBFacet {
    RatVec a;
    Rational b;
    std::vector<int> verts; // sorted point indices, size d
    bool alive = true;
};

std::optional<HalfSpace> hyperplane_through(const std::vector<RatVec>& pts,
                                            const std::vector<int>& vs, const RatVec& ref) {
    RatMat rows;
    for (size_t i = 1; i < vs.size(); ++i) {
        RatVec d(pts[vs[0]].size());
        for (size_t j = 0; j < d.size(); ++j) d[j] = pts[vs[i]][j] - pts[vs[0]][j];
        rows.push_back(std::move(d));
    }
    auto ns = nullspace(rows);
    if (ns.size() != 1) return std::nullopt;
    RatVec a = ns[0];
    Rational b = dot(a, pts[vs[0]]);
    Rational side = dot(a, ref);
    if (side < b) return HalfSpace{std::move(a), std::move(b)};
    if (side > b) {
        for (auto& x : a) x = -x;
        return HalfSpace{std::move(a), -b};
    }
    return std::nullopt;
}

} // namespace

std::vector<HalfSpace> hull_facets(const std::vector<RatVec>& input) {
    std::set<RatVec> dedup(input.begin(), input.end());
    std::vector<RatVec> pts(dedup.begin(), dedup.end());
    const int d = static_cast<int>(pts[0].size());
    if (affine_rank(pts) != d)
        throw precondition_error("hull_facets requires a full-dimensional point set");

    // Greedy affinely independent seed simplex.
    std::vector<int> init{0};
    std::vector<RatVec> sel{pts[0]};
    for (int i = 1; i < static_cast<int>(pts.size()) && init.size() < static_cast<size_t>(d) + 1; ++i) {
        sel.push_back(pts[i]);
        if (affine_rank(sel) == static_cast<int>(init.size()))
            init.push_back(i);
        else
            sel.pop_back();
    }
    assert(init.size() == static_cast<size_t>(d) + 1);

    RatVec ref(d, Rational(0));
    for (int v : init)
        for (int j = 0; j < d; ++j) ref[j] += pts[v][j];
    for (auto& x : ref) x /= d + 1;

    std::vector<BBFacet> facets;
    for (int skip = 0; skip <= d; ++skip) {
        std::vector<int> vs;
        for (int i = 0; i <= d; ++i)
            if (i != skip) vs.push_back(init[i]);
        std::sort(vs.begin(), vs.end());
        auto h = hyperplane_through(pts, vs, ref);
        assert(h);
        facets.push_back({std::move(h->a), std::move(h->b), std::move(vs), true});
    }

    std::set<int> in_init(init.begin(), init.end());
    for (int q = 0; q < static_cast<int>(pts.size()); ++q) {
        if (in_init.count(q)) continue;
        std::vector<int> visible;
        for (int f = 0; f < static_cast<int>(facets.size()); ++f)
            if (facets[f].alive && dot(facets[f].a, pts[q]) > facets[f].b)
                visible.push_back(f);
        if (visible.empty()) continue; // inside or on the current hull

        // ridge -> alive facet ids
        std::map<std::vector<int>, std::vector<int>> ridges;
        for (int f = 0; f < static_cast<int>(facets.size()); ++f) {
            if (!facets[f].alive) continue;
            for (size_t skip = 0; skip < facets[f].verts.size(); ++skip) {
                std::vector<int> r;
                for (size_t i = 0; i < facets[f].verts.size(); ++i)
                    if (i != skip) r.push_back(facets[f].verts[i]);
                ridges[r].push_back(f);
            }
        }

        std::vector<char> is_visible(facets.size(), 0);
        for (int f : visible) is_visible[f] = 1;
        std::vector<BBFacet> created;
        for (const auto& [ridge, fs] : ridges) {
            assert(fs.size() == 2);
            int nvis = is_visible[fs[0]] + is_visible[fs[1]];
            if (nvis != 1) continue; // interior to the visible patch, or untouched
            std::vector<int> vs = ridge;
            vs.push_back(q);
            std::sort(vs.begin(), vs.end());
            auto h = hyperplane_through(pts, vs, ref);
            assert(h); // q is off every hyperplane through a horizon ridge
            created.push_back({std::move(h->a), std::move(h->b), std::move(vs), true});
        }
        for (int f : visible) facets[f].alive = false;
        for (auto& f : created) facets.push_back(std::move(f));
    }

    std::set<std::pair<RatVec, Rational>> seen;
    std::vector<HalfSpace> out;
    for (const auto& f : facets) {
        if (!f.alive) continue;
        HalfSpace h = canonicalize({f.a, f.b});
        if (seen.insert({h.a, h.b}).second) out.push_back(std::move(h));
    }
    return out;
}

RationalPolytope convex_hull(int dim, const std::vector<RatVec>& points) {
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != dim) throw precondition_error("hull point dimension mismatch");
    std::set<RatVec> dedup(points.begin(), points.end());
    std::vector<RatVec> pts(dedup.begin(), dedup.end());
    if (pts.empty()) return RationalPolytope(dim, canonical_empty(dim));

    AffineReduction red = affine_reduce(pts);
    const int d = red.d;

    std::vector<HalfSpace> ineqs;
    if (d == 0) { // a single point: pin every coordinate
        for (int i = 0; i < dim; ++i) {
            RatVec up(dim, Rational(0)), down(dim, Rational(0));
            up[i] = 1;
            down[i] = -1;
            ineqs.push_back({std::move(up), red.p0[i]});
            ineqs.push_back({std::move(down), -red.p0[i]});
        }
        return RationalPolytope(dim, std::move(ineqs));
    }
    // Affine-hull equalities from the null space of the basis rows.
    for (const auto& u : nullspace(red.basis)) {
        Rational rhs = dot(u, red.p0);
        ineqs.push_back({u, rhs});
        RatVec neg(u.size());
        for (size_t j = 0; j < u.size(); ++j) neg[j] = -u[j];
        ineqs.push_back({std::move(neg), -rhs});
    }

    std::vector<HalfSpace> reduced_facets;
    if (d == 1) {
        Rational lo = red.reduce(pts[0])[0], hi = lo;
        for (const auto& p : pts) {
            Rational u = red.reduce(p)[0];
            lo = std::min(lo, u);
            hi = std::max(hi, u);
        }
        reduced_facets.push_back({{Rational(1)}, hi});
        reduced_facets.push_back({{Rational(-1)}, -lo});
    } else {
        std::vector<RatVec> reduced;
        reduced.reserve(pts.size());
        for (const auto& p : pts) reduced.push_back(red.reduce(p));
        reduced_facets = hull_facets(reduced);
    }

    // Map alpha.u <= beta back through u = L (x - p0).
    for (const auto& h : reduced_facets) {
        RatVec ax(dim, Rational(0));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < dim; ++j) ax[j] += h.a[i] * red.lmap[i][j];
        Rational bx = h.b + dot(ax, red.p0);
        ineqs.push_back({std::move(ax), std::move(bx)});
    }
    return RationalPolytope(dim, std::move(ineqs));
}

} // namespace oklab
