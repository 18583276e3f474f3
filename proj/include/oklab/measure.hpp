#pragma once

#include <utility>
#include <vector>

#include "oklab/pl_function.hpp"
#include "oklab/poly.hpp"

namespace oklab {

// A polynomial density supported on [lo, hi].
struct DensityPiece {
    Rational lo, hi;
    Poly density;

    bool operator==(const DensityPiece&) const = default;
};

/* A finite positive measure on the real line: finitely many atoms plus a
 * piecewise-polynomial density. Construction normalizes (atoms merged and
 * sorted, zero masses and zero-length or identically-zero pieces dropped)
 * and validates positivity of the density by exact root isolation. */
class MeasureOnR {
  public:
    MeasureOnR() = default; // the zero measure
    MeasureOnR(std::vector<std::pair<Rational, Rational>> atoms, std::vector<DensityPiece> pieces);

    // Sorted by location, strictly increasing, masses > 0.
    const std::vector<std::pair<Rational, Rational>>& atoms() const { return atoms_; }
    // Sorted intervals with disjoint interiors, densities not identically 0.
    const std::vector<DensityPiece>& pieces() const { return pieces_; }

    Rational total_mass() const;
    Rational atom_mass_at(const Rational& t) const;
    MeasureOnR scaled_mass(const Rational& s) const;

    // Equality as measures: identical atoms and densities that agree as
    // functions on the common refinement of the piece intervals.
    bool operator==(const MeasureOnR& other) const;

  private:
    std::vector<std::pair<Rational, Rational>> atoms_;
    std::vector<DensityPiece> pieces_;
};

/* Pushforward of Lebesgue measure on the domain of g under g. The tail
 * t -> vol{ g >= t } is piecewise polynomial of degree <= n with breakpoints
 * among the values of g at the subdivision vertices; each polynomial piece
 * is recovered exactly by interpolation, the density is its negated
 * derivative, and the top value carries an atom exactly when the maximum
 * set is full-dimensional. */
MeasureOnR pushforward_lebesgue(const ConcavePLFunction& g);

// m([t, infinity)), atoms at t included.
Rational tail(const MeasureOnR& m, const Rational& t);

// r-th moment, exact.
Rational moment(const MeasureOnR& m, int r);

// sup_t | tail(m1,t) - tail(m2,t) |, exact. Interior extrema of the tail
// difference are located by solving for roots of the density difference;
// supported exactly for density differences of degree <= 1 (dimension <= 2),
// which covers every measure this library builds at desk scale.
Rational kolmogorov_distance(const MeasureOnR& m1, const MeasureOnR& m2);

// Duistermaat-Heckman structure: every density piece has degree <= n-1 and
// the atoms are isolated points.
bool dh_structure_check(const MeasureOnR& m, int n);

} // namespace oklab
