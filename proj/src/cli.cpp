#include "oklab/cli.hpp"

#include <fstream>
#include <iostream>
#include <vector>

#include "oklab/errors.hpp"
#include "oklab/json_io.hpp"

namespace oklab {

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open input file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw validation_error("unparseable input: " + std::string(e.what()));
    }
    return j;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw validation_error("cannot open output file: " + path);
    out << content;
}

void write_json(const std::string& path, const json& j) { write_file(path, j.dump(2) + "\n"); }

// Secondary CSV path: the output path with its extension replaced by .csv.
std::string csv_path(const std::string& output) {
    size_t slash = output.find_last_of('/');
    size_t dot = output.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return output + ".csv";
    return output.substr(0, dot) + ".csv";
}

long long parse_degree(const std::string& s) {
    try {
        size_t pos = 0;
        long long k = std::stoll(s, &pos);
        if (pos != s.size() || k < 1) throw validation_error("");
        return k;
    } catch (const std::exception&) {
        throw validation_error("bad degree value: " + s);
    }
}

std::vector<long long> parse_degree_list(const std::string& s) {
    std::vector<long long> ks;
    size_t start = 0;
    while (start <= s.size()) {
        size_t comma = s.find(',', start);
        if (comma == std::string::npos) comma = s.size();
        if (comma > start) ks.push_back(parse_degree(s.substr(start, comma - start)));
        start = comma + 1;
    }
    if (ks.empty()) throw validation_error("empty degree list");
    return ks;
}

const std::string& require_param(const CommandRequest& req, const std::string& key) {
    auto it = req.params.find(key);
    if (it == req.params.end()) throw validation_error("missing required parameter --" + key);
    return it->second;
}

void run_body(const CommandRequest& req) {
    FiniteSemigroup s = semigroup_from_json(load_json(req.input_path));
    write_json(req.output_path, polytope_to_json(okounkov_body(s)));
}

void run_weights(const CommandRequest& req) {
    ToricTestConfiguration t(pl_function_from_testconfig_json(load_json(req.input_path)));
    long long k = parse_degree(require_param(req, "k"));
    WeightMeasurePair wm = weight_measure(t, k);
    write_json(req.output_path, json{{"k", k},
                                     {"raw", measure_to_json(wm.raw)},
                                     {"normalized", measure_to_json(wm.normalized)}});
}

void run_transform(const CommandRequest& req) {
    WeightFiltration f = filtration_from_json(load_json(req.input_path));
    std::vector<long long> ks = req.params.count("k_list")
                                    ? parse_degree_list(req.params.at("k_list"))
                                    : f.degrees();
    EnvelopeEstimate est = concave_transform_estimate(f, ks);
    json out = pl_function_to_json(est.envelope);
    out["boundary"] = "extrapolated"; // convergence is guaranteed on the interior only
    write_json(req.output_path, out);
    write_file(csv_path(req.output_path), cloud_csv(est.cloud));
}

void run_pushforward(const CommandRequest& req) {
    ConcavePLFunction g = pl_function_from_testconfig_json(load_json(req.input_path));
    MeasureOnR m = pushforward_lebesgue(g);
    write_json(req.output_path, measure_to_json(m));
    write_file(csv_path(req.output_path), measure_cdf_csv(m));
}

void run_converge(const CommandRequest& req) {
    ToricTestConfiguration t(pl_function_from_testconfig_json(load_json(req.input_path)));
    std::vector<long long> ks = parse_degree_list(require_param(req, "k_list"));
    MeasureOnR limit = pushforward_lebesgue(t.transform_datum());
    std::vector<ConvergenceRow> rows;
    for (long long k : ks) {
        MeasureOnR mu = weight_measure(t, k).normalized;
        ConvergenceRow row;
        row.k = k;
        row.kolmogorov = kolmogorov_distance(mu, limit);
        for (int r = 0; r < 3; ++r) row.moment_gap[r] = abs_rat(moment(mu, r) - moment(limit, r));
        rows.push_back(std::move(row));
    }
    write_file(req.output_path, converge_csv(rows));
}

void run_normal_cone(const CommandRequest& req) {
    NormalConeDatum d = normal_cone_from_json(load_json(req.input_path));
    std::vector<Rational> slice_params{Rational(0), d.c() / 2, d.c()};
    if (req.params.count("a")) slice_params.push_back(parse_rational(req.params.at("a")));
    json checks = json::array();
    for (const auto& a : slice_params)
        checks.push_back({{"a", rat_to_string(a)}, {"ok", slice_check(d, a)}});
    write_json(req.output_path, json{{"pushforward", measure_to_json(normal_cone_pushforward(d))},
                                     {"slice_checks", checks}});
}

void run_f0(const CommandRequest& req) {
    ToricTestConfiguration t(pl_function_from_testconfig_json(load_json(req.input_path)));
    std::vector<long long> ks;
    if (req.params.count("k_list"))
        ks = parse_degree_list(req.params.at("k_list"));
    else
        for (long long k = 1; k <= 10; ++k) ks.push_back(k);
    F0Result res = f0_invariant(t, ks);
    json table = json::array();
    for (const auto& [k, ratio] : res.ratio_table)
        table.push_back({{"k", k}, {"ratio", rat_to_string(ratio)}});
    write_json(req.output_path, json{{"f0", rat_to_string(res.f0)}, {"table", table}});
}

void run_check(const CommandRequest& req) {
    WeightFiltration f = filtration_from_json(load_json(req.input_path));
    long long k_max = req.params.count("k") ? parse_degree(req.params.at("k")) : f.degree_bound();
    AdmissibilityReport rep = check_admissible(f, k_max);
    json out{{"pass", rep.pass}, {"k_max", k_max}};
    if (!rep.pass) {
        json v{{"kind", rep.kind == AdmissibilityReport::Violation::Superadditivity
                            ? "superadditivity"
                            : "linear_bound"},
               {"k", rep.k},
               {"alpha", rep.alpha},
               {"detail", rep.describe()}};
        if (rep.kind == AdmissibilityReport::Violation::Superadditivity) {
            v["m"] = rep.m;
            v["beta"] = rep.beta;
        }
        out["violation"] = std::move(v);
    }
    write_json(req.output_path, out);
}

} // namespace

int run(const CommandRequest& req) {
    try {
        if (req.command == "body")
            run_body(req);
        else if (req.command == "weights")
            run_weights(req);
        else if (req.command == "transform")
            run_transform(req);
        else if (req.command == "pushforward")
            run_pushforward(req);
        else if (req.command == "converge")
            run_converge(req);
        else if (req.command == "normal-cone")
            run_normal_cone(req);
        else if (req.command == "f0")
            run_f0(req);
        else if (req.command == "check")
            run_check(req);
        else
            throw validation_error("unknown command: " + req.command);
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

} // namespace oklab
