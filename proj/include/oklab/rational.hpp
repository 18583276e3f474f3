#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace oklab {

// All geometry in this library is exact. Rational is GMP-backed and always
// kept canonical (lowest terms, positive denominator) by the backend, so
// equality and ordering are plain comparisons.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using RatVec = std::vector<Rational>;
using IntVec = std::vector<long long>;

Int floor_rat(const Rational& r);
Int ceil_rat(const Rational& r);

// Narrowing conversion with a range check; throws precondition_error on
// overflow. Lattice coordinates at desk scale always fit.
long long to_ll(const Int& v);

Rational abs_rat(const Rational& r);

// Accepts "p/q", "p", optional sign, surrounding whitespace. Throws
// validation_error on anything else (including q == 0).
Rational parse_rational(std::string_view s);

// "p/q" in lowest terms with q > 0, or just "p" when q == 1.
std::string rat_to_string(const Rational& r);

// Decimal approximation with the given number of significant digits,
// correctly rounded (ties away from zero). Used only for the approximate
// CSV columns; exact values always travel as "p/q" strings.
std::string decimal_approx(const Rational& r, int significant_digits = 12);

Rational dot(const RatVec& a, const RatVec& b);

RatVec to_rat_vec(const IntVec& v);

} // namespace oklab
