#pragma once

#include "oklab/filtration.hpp"
#include "oklab/measure.hpp"
#include "oklab/pl_function.hpp"

namespace oklab {

/* Deformation to the normal cone of a torus-invariant ample divisor, in
 * Okounkov coordinates adapted so that the divisor is the facet of P on
 * { x_1 = 0 } and the first coordinate records vanishing order along it.
 * The cut parameter c must keep P_c = P intersect { x_1 >= c }
 * full-dimensional. */
class NormalConeDatum {
  public:
    NormalConeDatum(RationalPolytope base, Rational c);

    const RationalPolytope& base() const { return base_; }
    const Rational& c() const { return c_; }

  private:
    RationalPolytope base_;
    Rational c_;
};

// P_a = P intersect { x_1 >= a } for 0 <= a <= c.
RationalPolytope shrunken_polytope(const NormalConeDatum& d, const Rational& a);

/* The induced filtration w_k(alpha) = min(alpha_1 - c k, 0). Only degrees
 * with c*k integral are materialized; other degrees are skipped. The linear
 * bound is c. */
WeightFiltration normal_cone_filtration(const NormalConeDatum& d, long long degree_bound);

// The limiting concave transform min(x_1 - c, 0) on P.
ConcavePLFunction normal_cone_transform(const NormalConeDatum& d);

/* Closed form of the limit measure: an atom of mass vol(P_c) at 0 plus the
 * density -d/dx vol(P_{x+c}) on [-c, 0]. vol(P_a) is piecewise polynomial
 * of degree <= n in a with breakpoints at vertex first-coordinates, and is
 * recovered exactly by interpolation on each breakpoint interval. */
MeasureOnR normal_cone_pushforward(const NormalConeDatum& d);

// The superlevel set { G >= a - c } of the transform coincides with P_a.
bool slice_check(const NormalConeDatum& d, const Rational& a);

} // namespace oklab
