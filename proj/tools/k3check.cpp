// Batch runner for the verification suites.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "k3k/suites.hpp"

namespace {

// "2^k" or "2^k/0xMOD"
k3k::FieldSpec parse_field(const std::string& text) {
    if (text.rfind("2^", 0) != 0) throw CLI::ValidationError("--field", "expected 2^k[/0xMOD]");
    size_t slash = text.find('/');
    int k = std::stoi(text.substr(2, slash == std::string::npos ? slash : slash - 2));
    if (slash == std::string::npos) return k3k::FieldSpec(k);
    return k3k::FieldSpec(k, std::stoull(text.substr(slash + 1), nullptr, 16));
}

std::vector<uint64_t> parse_params(const std::string& text) {
    std::vector<uint64_t> out;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        out.push_back(std::stoull(tok, nullptr, 16));
        pos = comma == std::string::npos ? text.size() : comma + 1;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic verification suites for characteristic-2 quartic "
                 "surface geometry"};
    std::string suite = "all";
    std::string field_text, params_text, json_path;
    int samples = 0;
    uint64_t seed = 1;
    int64_t budget_ms = 0;

    app.add_option("--suite", suite, "weddle|segre|congruence|configs|lattice|all")
        ->check(CLI::IsMember({"weddle", "segre", "congruence", "configs", "lattice", "all"}));
    app.add_option("--field", field_text, "base field, e.g. 2^4 or 2^8/0x11b");
    app.add_option("--params", params_text, "comma-separated hex field elements");
    app.add_option("--samples", samples, "sample count override for randomized checks");
    app.add_option("--seed", seed, "PRNG seed");
    app.add_option("--json", json_path, "write the JSON report to this path");
    app.add_option("--budget-ms", budget_ms, "per-suite wall-clock budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    k3k::SuiteOptions opts;
    opts.samples = samples;
    opts.seed = seed;
    opts.budget_ms = budget_ms;
    try {
        if (!field_text.empty()) opts.field = parse_field(field_text);
        if (!params_text.empty()) opts.params = parse_params(params_text);
    } catch (const std::exception& e) {
        std::cerr << "invalid options: " << e.what() << "\n";
        return 2;
    }

    std::vector<k3k::SuiteReport> reports;
    try {
        reports = k3k::run_suites(suite, opts);
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid options: " << e.what() << "\n";
        return 2;
    }

    bool all_pass = true;
    nlohmann::json out = nlohmann::json::array();
    for (const auto& rep : reports) {
        for (const auto& c : rep.checks)
            std::cout << rep.suite << " " << c.check_id << " " << c.status << " ("
                      << c.elapsed_ms << " ms) " << c.detail << "\n";
        std::cout << rep.suite << ": " << rep.overall() << "\n";
        all_pass &= rep.passed();
        out.push_back(rep.to_json());
    }
    if (!json_path.empty()) {
        std::ofstream f(json_path);
        f << out.dump(2) << "\n";
    }
    return all_pass ? 0 : 1;
}
