#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oklab/measure.hpp"
#include "oklab/pl_function.hpp"
#include "oklab/polytope.hpp"

namespace oklab {

/* An integer weight assignment on the monomial basis: for each materialized
 * degree k, a table alpha -> w_k(alpha) over exactly the lattice points of
 * k*P. Degrees may have gaps (deformation filtrations only materialize k
 * with c*k integral). Immutable once built. */
class WeightFiltration {
  public:
    // Validates that each degree table covers the lattice points of k*P
    // exactly. When no linear bound C is supplied, the empirical maximum of
    // |w_k(alpha)|/k is stored.
    WeightFiltration(RationalPolytope base,
                     std::map<long long, std::map<IntVec, long long>> weights,
                     std::optional<Rational> linear_bound = std::nullopt);

    const RationalPolytope& base() const { return base_; }
    std::vector<long long> degrees() const;
    long long degree_bound() const;
    bool materialized(long long k) const { return weights_.count(k) > 0; }
    // Weight table of degree k; throws when k is not materialized.
    const std::map<IntVec, long long>& level(long long k) const;
    const Rational& linear_bound() const { return linear_bound_; }

  private:
    RationalPolytope base_;
    std::map<long long, std::map<IntVec, long long>> weights_;
    Rational linear_bound_;
};

// dim F_t H0(kL) in the monomial model: the number of lattice points of k*P
// with weight >= t. Decreasing and left-continuous in t; real thresholds
// reduce to the integer grid by ceiling.
long long dim_filtration(const WeightFiltration& f, long long k, const Rational& t);

// The measure nu(F,k): an atom at w_k(alpha)/k of mass 1/k^n per lattice
// point alpha of k*P.
MeasureOnR nu_measure(const WeightFiltration& f, long long k);

// G_k on Delta_k, stored over the integer points alpha of k*P; the point of
// Delta_k is alpha/k and the value is w_k(alpha).
struct GkFunction {
    long long k;
    std::map<IntVec, long long> values;
};

GkFunction gk_function(const WeightFiltration& f, long long k);

/* Upper concave envelope of the sampled points (alpha/k, w_k(alpha)/k) over
 * the requested degrees, computed from the upper facets of the lifted
 * convex hull, together with the raw point cloud. Values on the boundary of
 * the domain are envelope extensions. */
struct EnvelopeEstimate {
    ConcavePLFunction envelope;
    std::vector<std::pair<RatVec, Rational>> cloud; // (site, value), lex-sorted
};

EnvelopeEstimate concave_transform_estimate(const WeightFiltration& f,
                                            const std::vector<long long>& k_list);

struct AdmissibilityReport {
    enum class Violation { None, Superadditivity, LinearBound };

    bool pass = true;
    Violation kind = Violation::None;
    // Superadditivity counterexample: w_{k+m}(alpha+beta) < w_k(alpha) + w_m(beta).
    long long k = 0, m = 0;
    IntVec alpha, beta;

    std::string describe() const;
};

/* Verify superadditivity w_{k+m}(alpha+beta) >= w_k(alpha) + w_m(beta) for
 * all materialized pairs with k+m <= k_max, and |w_k(alpha)| <= C*k. Returns
 * the first violating triple in scan order, if any. */
AdmissibilityReport check_admissible(const WeightFiltration& f, long long k_max);

} // namespace oklab
