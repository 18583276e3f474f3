#pragma once

#include <vector>

#include "oklab/polytope.hpp"

namespace oklab {

/* A concave piecewise-affine rational function on a domain polytope,
 * represented as the pointwise minimum of finitely many affine pieces.
 * Concavity is automatic from the representation. */
class ConcavePLFunction {
  public:
    ConcavePLFunction(RationalPolytope domain, std::vector<AffineForm> pieces);

    const RationalPolytope& domain() const { return domain_; }
    const std::vector<AffineForm>& pieces() const { return pieces_; }

    Rational value(const RatVec& x) const;

    // Minimum over the domain; a concave function attains it at a vertex.
    Rational min_on_domain() const;
    // Maximum over the domain, attained at a vertex of the subdivision.
    Rational max_on_domain() const;

    // Cell of the subdivision where piece i is active: domain intersected
    // with { piece_i <= piece_j for all j }. May be empty or lower-dimensional.
    RationalPolytope cell(size_t piece_index) const;

    // All vertices of the induced polyhedral subdivision, lex-sorted.
    std::vector<RatVec> subdivision_vertices() const;

  private:
    RationalPolytope domain_;
    std::vector<AffineForm> pieces_;
};

// { x in P : g(x) >= t }, the intersection of the domain with
// piece_i(x) >= t for every piece. May be empty.
RationalPolytope superlevel_set(const ConcavePLFunction& g, const Rational& t);

// Exact integral of g over its domain: the subdivision cells are
// triangulated and each affine piece integrates to volume times the mean of
// its vertex values.
Rational integrate_pl(const ConcavePLFunction& g);

} // namespace oklab
