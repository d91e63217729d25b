// Seeded experiment runner. Every experiment maps onto the library's checks;
// the CLI adds orchestration and output, no math of its own.
//
// Exit codes: 0 all assertions passed, 1 an assertion failed, 2 usage error.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ternary/experiments.hpp"

namespace {

void apply_json_config(const std::string& path, ternary::ExperimentConfig& config) {
    std::ifstream is(path);
    if (!is) throw CLI::ValidationError("--config", "cannot open " + path);
    nlohmann::json j;
    is >> j;
    // flags win over file values, so only fill fields the file provides and
    // let CLI11 overwrite afterwards
    if (j.contains("experiment")) config.experiment = j["experiment"].get<std::string>();
    if (j.contains("n")) config.n = j["n"].get<int>();
    if (j.contains("n_grid")) config.n_grid = j["n_grid"].get<std::vector<int>>();
    if (j.contains("epsilon")) config.epsilon = j["epsilon"].get<double>();
    if (j.contains("seed")) config.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("trials")) config.trials = j["trials"].get<int>();
    if (j.contains("family")) config.family = j["family"].get<std::string>();
    if (j.contains("out")) config.out = j["out"].get<std::string>();
    if (j.contains("format")) config.format = j["format"].get<std::string>();
    if (j.contains("threads")) config.threads = j["threads"].get<unsigned>();
    if (j.contains("m")) config.m = j["m"].get<int>();
    if (j.contains("m_grid")) config.m_grid = j["m_grid"].get<std::vector<int>>();
    if (j.contains("k")) config.k = j["k"].get<int>();
    if (j.contains("degree_cap")) config.degree_cap = j["degree_cap"].get<int>();
    if (j.contains("tau")) config.tau = j["tau"].get<double>();
    if (j.contains("radius")) config.radius = j["radius"].get<double>();
    if (j.contains("verify_gap")) config.verify_gap = j["verify_gap"].get<bool>();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ternary-lab: experiments over convex sets in {0,+-1}^n"};

    ternary::ExperimentConfig config;
    std::string config_path;

    // the file is applied before flag parsing, so flags always win
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") {
            try {
                apply_json_config(argv[i + 1], config);
            } catch (const std::exception& e) {
                std::cerr << "usage error: " << e.what() << "\n";
                return 2;
            }
        }
    }

    app.add_option("--config", config_path, "JSON config file (flags win)");
    app.add_option("-e,--experiment", config.experiment,
                               "influence-scaling | tester-eval | learner-eval | walk-scaling | "
                               "sparre-andersen | density-profile | dyes-dno | binomial-sweep | "
                               "distance-oracles");
    app.add_option("--n", config.n, "dimension");
    app.add_option("--n-grid", config.n_grid, "dimension grid");
    app.add_option("--epsilon", config.epsilon, "proximity parameter");
    app.add_option("--seed", config.seed, "master seed");
    app.add_option("--trials", config.trials, "trial count");
    app.add_option("--family", config.family,
                   "instance family: ball | halfspace | rhi | dyes | dno | tas | antislab");
    app.add_option("--out", config.out, "output data file");
    app.add_option("--format", config.format, "csv | json");
    app.add_option("--threads", config.threads, "parallelism degree (0 = logical cores)");
    app.add_option("--m", config.m, "walk length");
    app.add_option("--m-grid", config.m_grid, "walk length grid");
    app.add_option("--k", config.k, "constituent count");
    app.add_option("--degree-cap", config.degree_cap, "frequency degree cap");
    app.add_option("--tau", config.tau, "threshold parameter");
    app.add_option("--radius", config.radius, "ball radius for learner targets");
    app.add_flag("--verify-gap", config.verify_gap,
                 "tester-eval: measure the exact closure-gap mass of one instance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (config.experiment.empty()) {
        std::cerr << "usage error: --experiment is required\n";
        return 2;
    }

    try {
        const ternary::RunManifest man = ternary::run_experiment(config);
        try {
            ternary::write_outputs(man);
        } catch (const std::exception& e) {
            std::cerr << "usage error: " << e.what() << "\n";
            return 2;
        }
        for (const auto& line : man.assertions) std::cout << line << "\n";
        std::cout << "experiment " << config.experiment << " " << (man.pass ? "PASS" : "FAIL")
                  << " (" << man.wall_ms << " ms, " << man.csv_rows.size() << " records)\n";
        for (const auto& [key, value] : man.summary)
            std::cout << "  " << key << " = " << value << "\n";
        return man.pass ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        // dimension caps and parameter ranges are usage problems too
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
