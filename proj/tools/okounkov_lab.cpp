#include <CLI11.hpp>

#include "oklab/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"okounkov-lab: exact Okounkov bodies, weight measures and concave transforms"};
    app.require_subcommand(1);

    struct Spec {
        const char* name;
        const char* help;
        bool k, k_list, a;
    };
    // c arrives inside the normal-cone input file; a adds one slice check.
    const Spec specs[] = {
        {"body", "Okounkov body of a graded semigroup", false, false, false},
        {"weights", "raw and normalized weight measures at degree k", true, false, false},
        {"transform", "concave transform envelope of a weight filtration", false, true, false},
        {"pushforward", "pushforward of Lebesgue measure under a PL function", false, false, false},
        {"converge", "Kolmogorov distances and moment gaps along a degree list", false, true, false},
        {"normal-cone", "closed-form pushforward and slice checks", false, false, true},
        {"f0", "leading invariant F0 and finite-degree ratio table", false, true, false},
        {"check", "admissibility report for a weight filtration", true, false, false},
    };

    struct Options {
        std::string input, output, k, k_list, a;
    };
    std::map<std::string, Options> opts;
    for (const auto& s : specs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        Options& o = opts[s.name];
        sub->add_option("--input", o.input, "input JSON file")->required();
        sub->add_option("--output", o.output, "output file")->required();
        if (s.k) sub->add_option("--k", o.k, "degree");
        if (s.k_list) sub->add_option("--k-list", o.k_list, "comma-separated degrees");
        if (s.a) sub->add_option("--a", o.a, "extra slice parameter p/q");
    }

    CLI11_PARSE(app, argc, argv);

    CLI::App* sub = app.get_subcommands().front();
    const Options& o = opts[sub->get_name()];
    oklab::CommandRequest req;
    req.command = sub->get_name();
    req.input_path = o.input;
    req.output_path = o.output;
    if (!o.k.empty()) req.params["k"] = o.k;
    if (!o.k_list.empty()) req.params["k_list"] = o.k_list;
    if (!o.a.empty()) req.params["a"] = o.a;
    return oklab::run(req);
}
