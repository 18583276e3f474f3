#pragma once

#include <vector>

#include "oklab/polytope.hpp"

namespace oklab {

// A finitely generated sub-semigroup of N^(n+1), stored by its generator
// list. The generated semigroup is the set of nonempty sums of generators.
struct FiniteSemigroup {
    int ambient; // n + 1
    std::vector<IntVec> generators;

    FiniteSemigroup(int ambient_dim, std::vector<IntVec> gens);
};

// The rational cone spanned by a finite set of generators.
struct RationalCone {
    int ambient;
    std::vector<RatVec> generators;
};

RationalCone cone_of(const FiniteSemigroup& s);

// Exponent vector in N^n with the library-wide lexicographic order: first
// coordinate compared first, then the second, and so on.
struct MultiIndex {
    IntVec exponents;

    explicit MultiIndex(IntVec e);
    bool operator==(const MultiIndex&) const = default;
    bool operator<(const MultiIndex& o) const { return exponents < o.exponents; }
};

/* The Okounkov body of the semigroup: the height-1 slice of the cone
 * spanned by the generators, i.e. the convex hull of the generators
 * normalized to last coordinate 1. Generators with last coordinate 0 are
 * recession directions and are rejected (all-zero generators are ignored);
 * with none of positive last coordinate the grading is empty. */
RationalPolytope okounkov_body(const FiniteSemigroup& s);

/* Delta_k: all alpha with (k*alpha, k) in the generated semigroup, found by
 * dynamic programming over nonnegative integer combinations of the
 * generators reaching last coordinate k. Returned with denominator k, in
 * lexicographic order. */
std::vector<RatVec> delta_k(const FiniteSemigroup& s, long long k);

/* Lexicographically smallest multi-index among the terms of a polynomial
 * section representative. Terms must be distinct with nonzero
 * coefficients; an empty term list has no valuation. */
MultiIndex lowest_term_valuation(const std::vector<std::pair<MultiIndex, Rational>>& terms);

} // namespace oklab
