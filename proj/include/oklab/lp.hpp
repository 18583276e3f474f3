#pragma once

#include <vector>

#include "oklab/linalg.hpp"
#include "oklab/rational.hpp"

namespace oklab {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status;
    Rational value; // meaningful only when Optimal
    RatVec point;   // an optimal x, meaningful only when Optimal
};

// Solve  max c.x  subject to  A x <= b,  x free, by the two-phase tableau
// simplex with Bland's rule. Everything is rational, so the result is exact
// and termination is guaranteed. Sized for desk-scale systems (tens of rows
// and columns).
LpResult lp_maximize(const std::vector<RatVec>& a, const RatVec& b, const RatVec& c);

} // namespace oklab
