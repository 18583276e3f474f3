#include "oklab/poly.hpp"

#include <cassert>

#include "oklab/errors.hpp"

namespace oklab {

namespace {

void trim(RatVec& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

} // namespace

Poly::Poly(RatVec coeffs) : c_(std::move(coeffs)) { trim(c_); }

Poly Poly::constant(const Rational& c) { return Poly(RatVec{c}); }

Rational Poly::eval(const Rational& x) const {
    Rational v = 0;
    for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    RatVec d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(d));
}

Poly Poly::antiderivative() const {
    if (c_.empty()) return Poly();
    RatVec d(c_.size() + 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) d[i + 1] = c_[i] / Rational(static_cast<long>(i + 1));
    return Poly(std::move(d));
}

Rational Poly::integral(const Rational& lo, const Rational& hi) const {
    Poly f = antiderivative();
    return f.eval(hi) - f.eval(lo);
}

Poly Poly::operator+(const Poly& o) const {
    RatVec r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + o.scaled(Rational(-1)); }

Poly Poly::operator*(const Poly& o) const {
    if (c_.empty() || o.c_.empty()) return Poly();
    RatVec r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
}

Poly Poly::scaled(const Rational& s) const {
    RatVec r = c_;
    for (auto& x : r) x *= s;
    return Poly(std::move(r));
}

Poly Poly::lagrange(const std::vector<std::pair<Rational, Rational>>& nodes) {
    Poly acc;
    for (size_t i = 0; i < nodes.size(); ++i) {
        Poly term = Poly::constant(nodes[i].second);
        for (size_t j = 0; j < nodes.size(); ++j) {
            if (j == i) continue;
            Rational denom = nodes[i].first - nodes[j].first;
            if (denom == 0) throw precondition_error("interpolation nodes must be distinct");
            term = term * Poly(RatVec{-nodes[j].first / denom, Rational(1) / denom});
        }
        acc = acc + term;
    }
    return acc;
}

/* ------------------------------------------------------------------------
 * Sturm machinery for the exact nonnegativity check
 * ------------------------------------------------------------------------ */

namespace {

// Remainder of a by b, with b nonzero. The leading term cancels exactly at
// each step, so the degree strictly drops.
Poly poly_rem(Poly a, const Poly& b) {
    assert(!b.is_zero());
    while (!a.is_zero() && a.degree() >= b.degree()) {
        Rational f = a.coeffs().back() / b.coeffs().back();
        int shift = a.degree() - b.degree();
        RatVec r = a.coeffs();
        for (int i = 0; i <= b.degree(); ++i) r[i + shift] -= f * b.coeffs()[i];
        a = Poly(std::move(r));
    }
    return a;
}

Poly monic(const Poly& p) {
    if (p.is_zero()) return p;
    return p.scaled(Rational(1) / p.coeffs().back());
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_rem(a, b);
        a = std::move(b);
        b = monic(r);
    }
    return monic(a);
}

// Exact quotient when b divides a.
Poly poly_quot(Poly a, const Poly& b) {
    assert(!b.is_zero());
    RatVec q(a.degree() >= b.degree() ? static_cast<size_t>(a.degree() - b.degree() + 1) : 0,
             Rational(0));
    while (!a.is_zero() && a.degree() >= b.degree()) {
        Rational f = a.coeffs().back() / b.coeffs().back();
        int shift = a.degree() - b.degree();
        q[static_cast<size_t>(shift)] = f;
        RatVec r = a.coeffs();
        for (int i = 0; i <= b.degree(); ++i) r[i + shift] -= f * b.coeffs()[i];
        r.resize(static_cast<size_t>(a.degree())); // leading term cancels exactly
        a = Poly(std::move(r));
    }
    return Poly(std::move(q));
}

std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        Poly r = poly_rem(chain[chain.size() - 2], chain.back());
        chain.push_back(r.scaled(Rational(-1)));
    }
    chain.pop_back();
    return chain;
}

int sign_variations(const std::vector<Poly>& chain, const Rational& x) {
    int count = 0, last = 0;
    for (const auto& p : chain) {
        Rational v = p.eval(x);
        int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

// Divide by (x - r); remainder must vanish.
Poly deflate(const Poly& p, const Rational& r) {
    return poly_quot(p, Poly(RatVec{-r, Rational(1)}));
}

// A point of (a, b) where s does not vanish: s has finitely many roots, so
// one of deg+2 equally spaced interior candidates works.
Rational nonroot_split(const Poly& s, const Rational& a, const Rational& b) {
    int tries = s.degree() + 2;
    for (int j = 1; j <= tries; ++j) {
        Rational m = a + (b - a) * Rational(j, tries + 1);
        if (s.eval(m) != 0) return m;
    }
    throw std::logic_error("nonroot_split: more roots than degree");
}

// Isolating intervals for the roots of squarefree s in (a, b), with
// s nonzero at both interval endpoints; the recursion only splits at
// non-root points, so endpoints are never roots.
void isolate(const Poly& s, const std::vector<Poly>& chain, const Rational& a, const Rational& b,
             std::vector<std::pair<Rational, Rational>>& out) {
    int c = sign_variations(chain, a) - sign_variations(chain, b);
    if (c <= 0) return;
    if (c == 1) {
        out.emplace_back(a, b);
        return;
    }
    Rational m = nonroot_split(s, a, b);
    isolate(s, chain, a, m, out);
    isolate(s, chain, m, b, out);
}

// Shrink an isolating interval (holding one simple root of s) until its
// endpoints differ from the given boundary point.
void shrink_away(std::pair<Rational, Rational>& blk, const Poly& s, const Rational& boundary) {
    while (blk.first == boundary || blk.second == boundary) {
        Rational m = nonroot_split(s, blk.first, blk.second);
        bool root_left = (s.eval(blk.first) > 0) != (s.eval(m) > 0);
        (root_left ? blk.second : blk.first) = m;
    }
}

} // namespace

int count_roots_open(const Poly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero() || p.degree() == 0 || lo >= hi) return 0;
    Poly s = poly_quot(p, poly_gcd(p, p.derivative()));
    if (s.eval(lo) == 0 || s.eval(hi) == 0)
        throw precondition_error("count_roots_open: endpoint is a root");
    auto chain = sturm_chain(s);
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

bool poly_nonneg_on(const Poly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero() || lo > hi) return true;
    if (p.eval(lo) < 0 || p.eval(hi) < 0) return false;
    if (lo == hi || p.degree() == 0) return true;

    // Squarefree part, with any root at the endpoints removed so the Sturm
    // counts are clean. The root set of p inside (lo, hi) is unchanged.
    Poly s = poly_quot(p, poly_gcd(p, p.derivative()));
    while (!s.is_zero() && s.degree() >= 1 && s.eval(lo) == 0) s = deflate(s, lo);
    while (!s.is_zero() && s.degree() >= 1 && s.eval(hi) == 0) s = deflate(s, hi);
    std::vector<std::pair<Rational, Rational>> blockers;
    if (!s.is_zero() && s.degree() >= 1) {
        auto chain = sturm_chain(s);
        isolate(s, chain, lo, hi, blockers);
    }
    if (!blockers.empty()) {
        shrink_away(blockers.front(), s, lo);
        shrink_away(blockers.back(), s, hi);
    }

    /* The sign of p is constant on every maximal root-free subinterval, and
     * each one now contains a blocker endpoint (or a gap midpoint when there
     * are no roots at all): the interval before the first root contains u_1,
     * the one between roots r_i < r_{i+1} contains v_i, and the one after
     * the last root contains v_m. All of these are non-roots of p. */
    Rational prev = lo;
    for (const auto& [u, v] : blockers) {
        if (p.eval(u) < 0 || p.eval(v) < 0) return false;
        if (prev < u && p.eval((prev + u) / 2) < 0) return false;
        prev = v;
    }
    if (prev < hi && p.eval((prev + hi) / 2) < 0) return false;
    return true;
}

} // namespace oklab
