#pragma once

#include <vector>

#include "oklab/rational.hpp"

namespace oklab {

// Univariate polynomial with rational coefficients, ascending order,
// trailing zeros trimmed. The zero polynomial has empty coefficients and
// degree -1.
class Poly {
  public:
    Poly() = default;
    explicit Poly(RatVec coeffs);
    static Poly constant(const Rational& c);

    const RatVec& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    Rational eval(const Rational& x) const;
    Poly derivative() const;
    Poly antiderivative() const; // constant term 0
    Rational integral(const Rational& lo, const Rational& hi) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Rational& s) const;
    bool operator==(const Poly& o) const = default;

    // Unique interpolating polynomial through distinct nodes (x_i, y_i).
    static Poly lagrange(const std::vector<std::pair<Rational, Rational>>& nodes);

  private:
    RatVec c_;
};

// Exact check that p >= 0 everywhere on [lo, hi], via Sturm-sequence root
// isolation: the sign of p is constant between consecutive distinct roots,
// so it suffices to test p at the endpoints, at isolated-root interval
// boundaries, and at the rational roots found along the way.
bool poly_nonneg_on(const Poly& p, const Rational& lo, const Rational& hi);

// Number of distinct real roots of p in the open interval (lo, hi);
// endpoints must not be roots.
int count_roots_open(const Poly& p, const Rational& lo, const Rational& hi);

} // namespace oklab
