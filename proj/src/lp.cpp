#include "oklab/lp.hpp"

#include <cassert>

namespace oklab {

namespace {

// Tableau rows are constraint rows with the right-hand side in the last
// column. basis[i] is the column whose unit vector lives in row i; the
// right-hand side stays nonnegative throughout.
struct Tableau {
    std::vector<RatVec> rows;
    std::vector<int> basis;

    size_t ncols() const { return rows.empty() ? 0 : rows[0].size() - 1; }

    void pivot(size_t r, size_t c) {
        Rational inv = rows[r][c];
        for (auto& v : rows[r]) v /= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational f = rows[i][c];
            for (size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
        }
        basis[r] = static_cast<int>(c);
    }
};

enum class CoreStatus { Optimal, Unbounded };

// Maximize cost.x over the tableau. Bland's rule: smallest eligible entering
// column, smallest basis index on ratio ties.
CoreStatus simplex_core(Tableau& t, const RatVec& cost) {
    const size_t m = t.rows.size();
    const size_t n = cost.size();
    for (;;) {
        // reduced costs r_j = c_j - sum_i c_{basis_i} T[i][j]
        int entering = -1;
        for (size_t j = 0; j < n; ++j) {
            Rational r = cost[j];
            for (size_t i = 0; i < m; ++i)
                if (cost[t.basis[i]] != 0) r -= cost[t.basis[i]] * t.rows[i][j];
            if (r > 0) {
                entering = static_cast<int>(j);
                break;
            }
        }
        if (entering < 0) return CoreStatus::Optimal;

        int leaving = -1;
        Rational best_ratio = 0;
        for (size_t i = 0; i < m; ++i) {
            if (t.rows[i][entering] <= 0) continue;
            Rational ratio = t.rows[i].back() / t.rows[i][entering];
            if (leaving < 0 || ratio < best_ratio ||
                (ratio == best_ratio && t.basis[i] < t.basis[leaving])) {
                leaving = static_cast<int>(i);
                best_ratio = ratio;
            }
        }
        if (leaving < 0) return CoreStatus::Unbounded;
        t.pivot(static_cast<size_t>(leaving), static_cast<size_t>(entering));
    }
}

} // namespace

LpResult lp_maximize(const std::vector<RatVec>& a, const RatVec& b, const RatVec& c) {
    const size_t m = a.size();
    const size_t n = c.size();

    // Columns: u_1..u_n, w_1..w_n (x = u - w), slacks s_1..s_m, then one
    // artificial per row whose slack enters with coefficient -1.
    std::vector<int> art_col(m, -1);
    size_t nart = 0;
    for (size_t i = 0; i < m; ++i)
        if (b[i] < 0) art_col[i] = static_cast<int>(2 * n + m + nart++);
    const size_t ncols = 2 * n + m + nart;

    Tableau t;
    t.rows.assign(m, RatVec(ncols + 1, Rational(0)));
    t.basis.assign(m, 0);
    for (size_t i = 0; i < m; ++i) {
        int sgn = b[i] < 0 ? -1 : 1;
        for (size_t j = 0; j < n; ++j) {
            t.rows[i][j] = sgn * a[i][j];
            t.rows[i][n + j] = -sgn * a[i][j];
        }
        t.rows[i][2 * n + i] = sgn;
        t.rows[i].back() = sgn * b[i];
        if (art_col[i] >= 0) {
            t.rows[i][art_col[i]] = 1;
            t.basis[i] = art_col[i];
        } else {
            t.basis[i] = static_cast<int>(2 * n + i);
        }
    }

    if (nart > 0) {
        RatVec phase1(ncols, Rational(0));
        for (size_t i = 0; i < m; ++i)
            if (art_col[i] >= 0) phase1[art_col[i]] = -1;
        simplex_core(t, phase1); // bounded above by 0, never Unbounded
        Rational obj = 0;
        for (size_t i = 0; i < m; ++i)
            if (phase1[t.basis[i]] != 0) obj += phase1[t.basis[i]] * t.rows[i].back();
        if (obj < 0) return {LpStatus::Infeasible, Rational(0), {}};

        // Drive remaining (degenerate, value-zero) artificials out of the
        // basis; rows with no structural coefficient are redundant.
        for (size_t i = 0; i < t.rows.size();) {
            if (t.basis[i] < static_cast<int>(2 * n + m)) {
                ++i;
                continue;
            }
            size_t j = 0;
            while (j < 2 * n + m && t.rows[i][j] == 0) ++j;
            if (j < 2 * n + m) {
                t.pivot(i, j);
                ++i;
            } else {
                t.rows.erase(t.rows.begin() + static_cast<long>(i));
                t.basis.erase(t.basis.begin() + static_cast<long>(i));
            }
        }
        // strip artificial columns
        for (auto& row : t.rows) {
            Rational rhs = row.back();
            row.resize(2 * n + m);
            row.push_back(rhs);
        }
    }

    RatVec phase2(2 * n + m, Rational(0));
    for (size_t j = 0; j < n; ++j) {
        phase2[j] = c[j];
        phase2[n + j] = -c[j];
    }
    if (simplex_core(t, phase2) == CoreStatus::Unbounded)
        return {LpStatus::Unbounded, Rational(0), {}};

    RatVec x(n, Rational(0));
    for (size_t i = 0; i < t.rows.size(); ++i) {
        int bcol = t.basis[i];
        if (bcol < static_cast<int>(n))
            x[bcol] += t.rows[i].back();
        else if (bcol < static_cast<int>(2 * n))
            x[bcol - n] -= t.rows[i].back();
    }
    return {LpStatus::Optimal, dot(c, x), x};
}

} // namespace oklab
