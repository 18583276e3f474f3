#include "oklab/json_io.hpp"

#include <set>
#include <sstream>

#include "oklab/errors.hpp"

namespace oklab {

namespace {

Rational rat_field(const json& j, const char* what) {
    if (!j.is_string()) throw validation_error(std::string(what) + ": expected a rational string");
    return parse_rational(j.get<std::string>());
}

RatVec rat_vector(const json& j, const char* what) {
    if (!j.is_array()) throw validation_error(std::string(what) + ": expected an array");
    RatVec v;
    for (const auto& x : j) v.push_back(rat_field(x, what));
    return v;
}

long long int_field(const json& j, const char* what) {
    if (!j.is_number_integer()) throw validation_error(std::string(what) + ": expected an integer");
    return j.get<long long>();
}

const json& member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw validation_error(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

} // namespace

json polytope_to_json(const RationalPolytope& p) {
    json ineqs = json::array();
    for (const auto& h : p.inequalities()) {
        json a = json::array();
        for (const auto& x : h.a) a.push_back(rat_to_string(x));
        ineqs.push_back({{"a", a}, {"b", rat_to_string(h.b)}});
    }
    return {{"dim", p.dim()}, {"ineqs", ineqs}};
}

RationalPolytope polytope_from_json(const json& j) {
    int dim = static_cast<int>(int_field(member(j, "dim"), "dim"));
    std::vector<HalfSpace> ineqs;
    for (const auto& hj : member(j, "ineqs")) {
        RatVec a = rat_vector(member(hj, "a"), "ineqs.a");
        if (static_cast<int>(a.size()) != dim)
            throw validation_error("inequality coefficient count differs from dim");
        ineqs.push_back({std::move(a), rat_field(member(hj, "b"), "ineqs.b")});
    }
    return RationalPolytope(dim, std::move(ineqs));
}

json semigroup_to_json(const FiniteSemigroup& s) {
    json gens = json::array();
    for (const auto& g : s.generators) gens.push_back(g);
    return {{"ambient", s.ambient}, {"generators", gens}};
}

FiniteSemigroup semigroup_from_json(const json& j) {
    int ambient = static_cast<int>(int_field(member(j, "ambient"), "ambient"));
    std::vector<IntVec> gens;
    for (const auto& gj : member(j, "generators")) {
        if (!gj.is_array()) throw validation_error("generators: expected arrays of integers");
        IntVec g;
        for (const auto& x : gj) g.push_back(int_field(x, "generators"));
        gens.push_back(std::move(g));
    }
    return FiniteSemigroup(ambient, std::move(gens));
}

namespace {

json pieces_to_json(const std::vector<AffineForm>& pieces) {
    json out = json::array();
    for (const auto& p : pieces) {
        json a = json::array();
        for (const auto& x : p.a) a.push_back(rat_to_string(x));
        out.push_back({{"a", a}, {"b", rat_to_string(p.b)}});
    }
    return out;
}

std::vector<AffineForm> pieces_from_json(const json& j, int dim) {
    std::vector<AffineForm> pieces;
    for (const auto& pj : j) {
        RatVec a = rat_vector(member(pj, "a"), "pieces.a");
        if (static_cast<int>(a.size()) != dim)
            throw validation_error("piece coefficient count differs from dim");
        pieces.push_back({std::move(a), rat_field(member(pj, "b"), "pieces.b")});
    }
    return pieces;
}

} // namespace

json pl_function_to_json(const ConcavePLFunction& g) {
    return {{"domain", polytope_to_json(g.domain())}, {"pieces", pieces_to_json(g.pieces())}};
}

ConcavePLFunction pl_function_from_testconfig_json(const json& j) {
    RationalPolytope p = polytope_from_json(member(j, "polytope"));
    auto pieces = pieces_from_json(member(member(j, "g"), "pieces"), p.dim());
    return ConcavePLFunction(std::move(p), std::move(pieces));
}

json filtration_to_json(const WeightFiltration& f) {
    json weights = json::object();
    for (long long k : f.degrees()) {
        json rows = json::array();
        for (const auto& [alpha, w] : f.level(k)) {
            json row = json::array();
            for (long long x : alpha) row.push_back(x);
            row.push_back(w);
            rows.push_back(std::move(row));
        }
        weights[std::to_string(k)] = std::move(rows);
    }
    return {{"base", polytope_to_json(f.base())}, {"weights", weights}};
}

WeightFiltration filtration_from_json(const json& j) {
    RationalPolytope base = polytope_from_json(member(j, "base"));
    const json& wj = member(j, "weights");
    if (!wj.is_object()) throw validation_error("weights: expected an object keyed by degree");
    std::map<long long, std::map<IntVec, long long>> weights;
    for (const auto& [key, rows] : wj.items()) {
        long long k;
        try {
            k = std::stoll(key);
        } catch (const std::exception&) {
            throw validation_error("weights: bad degree key \"" + key + "\"");
        }
        auto& table = weights[k];
        for (const auto& row : rows) {
            if (!row.is_array() || row.size() != static_cast<size_t>(base.dim()) + 1)
                throw validation_error("weights: each row is [alpha..., w]");
            IntVec alpha;
            for (size_t i = 0; i + 1 < row.size(); ++i) alpha.push_back(int_field(row[i], "weights.alpha"));
            table[std::move(alpha)] = int_field(row.back(), "weights.w");
        }
    }
    return WeightFiltration(std::move(base), std::move(weights));
}

NormalConeDatum normal_cone_from_json(const json& j) {
    RationalPolytope p = polytope_from_json(member(j, "polytope"));
    if (int_field(member(j, "facet_coordinate"), "facet_coordinate") != 1)
        throw validation_error("facet_coordinate must be 1 (adapted coordinates)");
    return NormalConeDatum(std::move(p), rat_field(member(j, "c"), "c"));
}

json measure_to_json(const MeasureOnR& m) {
    json atoms = json::array();
    for (const auto& [loc, mass] : m.atoms())
        atoms.push_back(json::array({rat_to_string(loc), rat_to_string(mass)}));
    json pieces = json::array();
    for (const auto& p : m.pieces()) {
        json coeffs = json::array();
        for (const auto& c : p.density.coeffs()) coeffs.push_back(rat_to_string(c));
        pieces.push_back({{"l", rat_to_string(p.lo)}, {"r", rat_to_string(p.hi)}, {"coeffs", coeffs}});
    }
    return {{"atoms", atoms}, {"pieces", pieces}};
}

MeasureOnR measure_from_json(const json& j) {
    std::vector<std::pair<Rational, Rational>> atoms;
    for (const auto& aj : member(j, "atoms")) {
        if (!aj.is_array() || aj.size() != 2) throw validation_error("atoms: expected [loc, mass] pairs");
        atoms.emplace_back(rat_field(aj[0], "atoms.loc"), rat_field(aj[1], "atoms.mass"));
    }
    std::vector<DensityPiece> pieces;
    for (const auto& pj : member(j, "pieces")) {
        pieces.push_back({rat_field(member(pj, "l"), "pieces.l"), rat_field(member(pj, "r"), "pieces.r"),
                          Poly(rat_vector(member(pj, "coeffs"), "pieces.coeffs"))});
    }
    return MeasureOnR(std::move(atoms), std::move(pieces));
}

/* ------------------------------------------------------------------------
 * CSV
 * ------------------------------------------------------------------------ */

namespace {

void csv_pair(std::ostringstream& os, const Rational& t, const Rational& v) {
    os << rat_to_string(t) << "," << rat_to_string(v) << "," << decimal_approx(t) << ","
       << decimal_approx(v) << "\n";
}

} // namespace

std::string measure_cdf_csv(const MeasureOnR& m) {
    std::set<Rational> pts;
    for (const auto& [loc, mass] : m.atoms()) pts.insert(loc);
    for (const auto& p : m.pieces()) {
        pts.insert(p.lo);
        pts.insert(p.hi);
        for (int i = 1; i < 8; ++i) pts.insert(p.lo + (p.hi - p.lo) * Rational(i, 8));
    }
    std::ostringstream os;
    os << "t,tail,t_approx,tail_approx\n";
    for (const auto& t : pts) {
        Rational left = tail(m, t);
        csv_pair(os, t, left);
        Rational right = left - m.atom_mass_at(t);
        if (right != left) csv_pair(os, t, right);
    }
    return os.str();
}

std::string cloud_csv(const std::vector<std::pair<RatVec, Rational>>& cloud) {
    std::ostringstream os;
    size_t n = cloud.empty() ? 0 : cloud[0].first.size();
    for (size_t i = 0; i < n; ++i) os << "x" << i + 1 << ",";
    os << "value";
    for (size_t i = 0; i < n; ++i) os << ",x" << i + 1 << "_approx";
    os << ",value_approx\n";
    for (const auto& [site, value] : cloud) {
        for (const auto& x : site) os << rat_to_string(x) << ",";
        os << rat_to_string(value);
        for (const auto& x : site) os << "," << decimal_approx(x);
        os << "," << decimal_approx(value) << "\n";
    }
    return os.str();
}

std::string converge_csv(const std::vector<ConvergenceRow>& rows) {
    std::ostringstream os;
    os << "k,kolmogorov,moment0_gap,moment1_gap,moment2_gap,kolmogorov_approx,moment0_gap_approx,"
          "moment1_gap_approx,moment2_gap_approx\n";
    for (const auto& r : rows) {
        os << r.k << "," << rat_to_string(r.kolmogorov);
        for (const auto& g : r.moment_gap) os << "," << rat_to_string(g);
        os << "," << decimal_approx(r.kolmogorov);
        for (const auto& g : r.moment_gap) os << "," << decimal_approx(g);
        os << "\n";
    }
    return os.str();
}

} // namespace oklab
