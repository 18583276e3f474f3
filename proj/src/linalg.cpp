#include "oklab/linalg.hpp"

namespace oklab {

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<int> rref(RatMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rational inv = m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] /= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

} // namespace

int rank(RatMat m) { return static_cast<int>(rref(m).size()); }

Rational determinant(RatMat m) {
    size_t n = m.size();
    Rational det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[c][c];
            for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

std::optional<RatVec> solve_linear(RatMat a, RatVec b) {
    size_t n = a.size();
    for (size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    std::vector<int> pivots = rref(a);
    if (pivots.size() != n) return std::nullopt;
    for (size_t i = 0; i < n; ++i)
        if (pivots[i] != static_cast<int>(i)) return std::nullopt; // augmented column pivot
    RatVec x(n);
    for (size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

std::vector<RatVec> nullspace(const RatMat& m) {
    if (m.empty()) return {};
    RatMat a = m;
    size_t cols = a[0].size();
    std::vector<int> pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        RatVec v(cols, Rational(0));
        v[free_c] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

int affine_rank(const std::vector<RatVec>& points) {
    if (points.size() <= 1) return 0;
    RatMat diffs;
    for (size_t i = 1; i < points.size(); ++i) {
        RatVec d(points[i].size());
        for (size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
        diffs.push_back(std::move(d));
    }
    return rank(std::move(diffs));
}

RatVec AffineReduction::reduce(const RatVec& p) const {
    RatVec diff(p.size()), u(static_cast<size_t>(d));
    for (size_t j = 0; j < p.size(); ++j) diff[j] = p[j] - p0[j];
    for (int i = 0; i < d; ++i) u[static_cast<size_t>(i)] = dot(lmap[static_cast<size_t>(i)], diff);
    return u;
}

AffineReduction affine_reduce(const std::vector<RatVec>& points) {
    AffineReduction red;
    red.p0 = points.at(0);
    red.independent_points.push_back(0);
    const size_t n = red.p0.size();
    for (size_t i = 1; i < points.size(); ++i) {
        RatVec diff(n);
        for (size_t j = 0; j < n; ++j) diff[j] = points[i][j] - red.p0[j];
        red.basis.push_back(std::move(diff));
        if (rank(red.basis) != static_cast<int>(red.basis.size()))
            red.basis.pop_back();
        else
            red.independent_points.push_back(static_cast<int>(i));
    }
    red.d = static_cast<int>(red.basis.size());
    if (red.d == 0) return red;

    RatMat mtm(red.basis.size(), RatVec(red.basis.size()));
    for (size_t i = 0; i < red.basis.size(); ++i)
        for (size_t j = 0; j < red.basis.size(); ++j) mtm[i][j] = dot(red.basis[i], red.basis[j]);
    red.lmap.assign(red.basis.size(), RatVec(n));
    for (size_t col = 0; col < n; ++col) {
        RatVec rhs(red.basis.size());
        for (size_t i = 0; i < red.basis.size(); ++i) rhs[i] = red.basis[i][col];
        auto sol = solve_linear(mtm, std::move(rhs));
        for (size_t i = 0; i < red.basis.size(); ++i) red.lmap[i][col] = (*sol)[i];
    }
    return red;
}

} // namespace oklab
