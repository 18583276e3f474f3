#pragma once

#include <utility>
#include <vector>

#include "oklab/rational.hpp"

namespace oklab {

// An affine function x -> a.x + b.
struct AffineForm {
    RatVec a;
    Rational b;

    Rational value(const RatVec& x) const { return dot(a, x) + b; }
    bool operator==(const AffineForm&) const = default;
};

// The halfspace a.x <= b.
struct HalfSpace {
    RatVec a;
    Rational b;

    bool operator==(const HalfSpace&) const = default;
};

/* A bounded rational polytope, H-representation primary. Construction
 * canonicalizes: inequalities are scaled to primitive integer form,
 * infeasible systems collapse to a canonical empty polytope, unbounded
 * systems are rejected, redundant inequalities are removed by exact LP,
 * and the vertex list is enumerated by intersecting n-subsets of tight
 * hyperplanes. Lower-dimensional and empty polytopes are representable;
 * every instance is immutable after construction and safe to share. */
class RationalPolytope {
  public:
    RationalPolytope(int dim, std::vector<HalfSpace> ineqs);

    int dim() const { return dim_; }
    bool empty() const { return empty_; }
    bool full_dimensional() const { return full_dim_; }
    const std::vector<HalfSpace>& inequalities() const { return ineqs_; }
    // Lexicographically sorted, deduplicated.
    const std::vector<RatVec>& vertices() const { return vertices_; }

    bool contains(const RatVec& x) const;
    bool contains(const RationalPolytope& other) const;
    // Set equality via mutual inclusion certified per-vertex.
    bool operator==(const RationalPolytope& other) const;

    // Componentwise [lo, hi] over the vertices; polytope must be nonempty.
    std::pair<RatVec, RatVec> bounding_box() const;

  private:
    int dim_;
    std::vector<HalfSpace> ineqs_;
    std::vector<RatVec> vertices_;
    bool empty_ = false;
    bool full_dim_ = false;
};

// Exact Lebesgue volume; 0 iff the polytope is not full-dimensional.
Rational volume(const RationalPolytope& p);

// { k x : x in P } for k > 0.
RationalPolytope dilate(const RationalPolytope& p, const Rational& k);

// Convex hull of pairwise vertex sums; equals { x + y : x in P, y in Q }.
RationalPolytope minkowski_sum(const RationalPolytope& p, const RationalPolytope& q);

// All integer points of P in lexicographic order, by bounding box scan with
// exact membership tests. Honors the OKOUNKOV_THREADS cap for large boxes.
std::vector<IntVec> lattice_points(const RationalPolytope& p);

// H-representation of conv(points). Handles empty, lower-dimensional and
// full-dimensional inputs.
RationalPolytope convex_hull(int dim, const std::vector<RatVec>& points);

// A triangulation of P into full-dimensional simplices, each given by its
// n+1 vertices. Empty when P is not full-dimensional.
std::vector<std::vector<RatVec>> triangulate(const RationalPolytope& p);

// Facets a.x <= b of conv(points) for a full-dimensional point set, by the
// beneath-beyond incremental hull. Hyperplanes are deduplicated, primitive,
// and oriented outward. Exposed for the envelope construction.
std::vector<HalfSpace> hull_facets(const std::vector<RatVec>& points);

// Maximum number of worker threads (OKOUNKOV_THREADS, default all cores).
unsigned max_threads();

} // namespace oklab
