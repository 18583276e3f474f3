#pragma once

#include <optional>
#include <vector>

#include "oklab/rational.hpp"

namespace oklab {

// Dense exact linear algebra over the rationals, sized for the ambient
// dimensions this library works in (n <= 6 or so). Matrices are row-major
// vectors of rows.
using RatMat = std::vector<RatVec>;

int rank(RatMat m);

// Determinant of a square matrix.
Rational determinant(RatMat m);

// Unique solution of the square system a*x = b, or nullopt when a is
// singular.
std::optional<RatVec> solve_linear(RatMat a, RatVec b);

// Basis of { x : m*x = 0 }.
std::vector<RatVec> nullspace(const RatMat& m);

// Affine rank of a point set: rank of the differences to the first point.
// The affine dimension is affine_rank(points); a single point has rank 0.
int affine_rank(const std::vector<RatVec>& points);

/* Coordinates on the affine hull of a point set. basis holds d linearly
 * independent difference vectors (rows) chosen greedily from the input;
 * independent_points lists the indices of the d+1 points that produced
 * them, and lmap = (M^T M)^{-1} M^T maps x - p0 to the d reduced
 * coordinates, exactly. */
struct AffineReduction {
    RatVec p0;
    RatMat basis; // d rows
    RatMat lmap;  // d x n
    std::vector<int> independent_points;
    int d = 0;

    RatVec reduce(const RatVec& p) const;
};

AffineReduction affine_reduce(const std::vector<RatVec>& points);

} // namespace oklab
