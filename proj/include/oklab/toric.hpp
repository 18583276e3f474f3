#pragma once

#include <vector>

#include "oklab/filtration.hpp"
#include "oklab/measure.hpp"
#include "oklab/pl_function.hpp"

namespace oklab {

/* A toric test configuration: an integral moment polytope P together with a
 * nonnegative concave rational piecewise-affine g on it. The roof polytope
 * Q = { (x,y) : x in P, 0 <= y <= g(x) } encodes the induced degeneration;
 * the weight of the monomial at alpha in kP is the height of the top
 * lattice point of kQ over alpha, floor(k g(alpha/k)). */
class ToricTestConfiguration {
  public:
    explicit ToricTestConfiguration(ConcavePLFunction g);

    const ConcavePLFunction& transform_datum() const { return g_; }
    const RationalPolytope& base() const { return g_.domain(); }

    // Smallest positive r making the dilated roof polytope r*Q integral.
    long long integrality_scale() const;

  private:
    ConcavePLFunction g_;
};

// Q in dimension n+1: x in P, y >= 0, y <= piece_i(x) for every piece.
RationalPolytope roof_polytope(const ToricTestConfiguration& t);

struct WeightMeasurePair {
    MeasureOnR raw;        // atom at eta = floor(k g(alpha/k)) per lattice point
    MeasureOnR normalized; // atoms at eta/k with mass 1/k^n
};

WeightMeasurePair weight_measure(const ToricTestConfiguration& t, long long k);

// The induced weight filtration w_k(alpha) = floor(k g(alpha/k)) for all
// degrees up to degree_bound, with linear bound max(|min g|, |max g|).
WeightFiltration toric_filtration(const ToricTestConfiguration& t, long long degree_bound);

struct F0Result {
    Rational f0;                                            // integral of g over P / vol(P)
    std::vector<std::pair<long long, Rational>> ratio_table; // k -> w_k / (k d_k)
};

// F0 plus the exact finite-degree ratios w_k/(k d_k), where w_k is the first
// moment of the raw weight measure and d_k its total mass.
F0Result f0_invariant(const ToricTestConfiguration& t, const std::vector<long long>& k_list);

} // namespace oklab
