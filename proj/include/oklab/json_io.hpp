#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "oklab/filtration.hpp"
#include "oklab/measure.hpp"
#include "oklab/normal_cone.hpp"
#include "oklab/okounkov.hpp"
#include "oklab/pl_function.hpp"
#include "oklab/polytope.hpp"
#include "oklab/toric.hpp"

namespace oklab {

using json = nlohmann::json;

/* JSON schemas. Rationals travel as strings "p/q" in lowest terms with
 * q > 0 (plain "p" when q == 1).
 *
 *   polytope     {"dim": n, "ineqs": [{"a": ["p/q", ...], "b": "p/q"}, ...]}
 *   semigroup    {"ambient": n+1, "generators": [[ints], ...]}
 *   filtration   {"base": <polytope>, "weights": {"1": [[alpha..., w], ...], ...}}
 *   testconfig   {"polytope": <polytope>, "g": {"pieces": [{"a": [...], "b": "p/q"}, ...]}}
 *   pl function  {"domain": <polytope>, "pieces": [{"a": [...], "b": "p/q"}, ...]}
 *   normal cone  {"polytope": <polytope>, "facet_coordinate": 1, "c": "p/q"}
 *   measure      {"atoms": [["loc", "mass"], ...],
 *                 "pieces": [{"l": "p/q", "r": "p/q", "coeffs": ["p/q", ...]}]}
 *
 * Density coefficients are ascending (constant term first). Malformed input
 * raises validation_error. */

json polytope_to_json(const RationalPolytope& p);
RationalPolytope polytope_from_json(const json& j);

json semigroup_to_json(const FiniteSemigroup& s);
FiniteSemigroup semigroup_from_json(const json& j);

json pl_function_to_json(const ConcavePLFunction& g);
// Test-configuration shape: {"polytope": ..., "g": {"pieces": ...}}.
ConcavePLFunction pl_function_from_testconfig_json(const json& j);

json filtration_to_json(const WeightFiltration& f);
WeightFiltration filtration_from_json(const json& j);

NormalConeDatum normal_cone_from_json(const json& j);

json measure_to_json(const MeasureOnR& m);
MeasureOnR measure_from_json(const json& j);

/* CSV exports. Exact columns come first, the decimal columns (12
 * significant digits) are suffixed _approx and are for plotting only. */

// Sampled tail function: rows at every atom and breakpoint (a second row
// captures the right limit across a jump) and 8 interior samples per piece.
std::string measure_cdf_csv(const MeasureOnR& m);

// One row per sample point of an envelope estimate.
std::string cloud_csv(const std::vector<std::pair<RatVec, Rational>>& cloud);

struct ConvergenceRow {
    long long k;
    Rational kolmogorov;
    Rational moment_gap[3]; // orders 0, 1, 2
};

std::string converge_csv(const std::vector<ConvergenceRow>& rows);

} // namespace oklab
