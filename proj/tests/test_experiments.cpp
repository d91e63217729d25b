#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "ternary/experiments.hpp"

using namespace ternary;

namespace {

ExperimentConfig small(const std::string& name) {
    ExperimentConfig c;
    c.experiment = name;
    c.seed = 99;
    c.threads = 2;
    return c;
}

}  // namespace

TEST_CASE("unknown experiments are usage errors") {
    CHECK_THROWS_AS(run_experiment(small("nope")), std::invalid_argument);
}

TEST_CASE("records reproduce bit-for-bit across reruns and thread counts") {
    ExperimentConfig c = small("tester-eval");
    c.n = 6;
    c.epsilon = 0.25;
    c.family = "tas";
    c.trials = 8;
    const RunManifest a = run_experiment(c);
    c.threads = 1;
    const RunManifest b = run_experiment(c);
    CHECK(a.csv_rows == b.csv_rows);
    CHECK(a.pass);
}

TEST_CASE("small sparre-andersen run passes its gate") {
    ExperimentConfig c = small("sparre-andersen");
    c.m = 8;
    c.trials = 20000;
    const RunManifest man = run_experiment(c);
    CHECK(man.pass);
    CHECK(man.csv_rows.size() == 20000);
}

TEST_CASE("distance-oracle experiment covers every subset") {
    ExperimentConfig c = small("distance-oracles");
    c.n = 2;
    const RunManifest man = run_experiment(c);
    CHECK(man.pass);
    CHECK(man.csv_rows.size() == 512);
}

TEST_CASE("walk-scaling on a reduced grid") {
    ExperimentConfig c = small("walk-scaling");
    c.m_grid = {16, 64, 256};
    c.k = 4;
    c.trials = 2500;
    const RunManifest man = run_experiment(c);
    CHECK(man.pass);
}

TEST_CASE("manifest json carries run records for the tester") {
    ExperimentConfig c = small("tester-eval");
    c.n = 6;
    c.epsilon = 0.3;
    c.family = "ball";
    c.trials = 4;
    const RunManifest man = run_experiment(c);
    CHECK(man.pass);
    const auto j = nlohmann::json::parse(manifest_to_json(man));
    CHECK(j["pass"].get<bool>());
    CHECK(j["run_records"].size() == 4);
    for (const auto& rec : j["run_records"]) {
        CHECK(rec.contains("seed"));
        CHECK(rec.contains("decision"));
        CHECK(rec.contains("queries"));
        CHECK(rec.contains("wall_ms"));
        CHECK(rec["decision"] == "accept");
    }
}

TEST_CASE("output files land next to the manifest") {
    ExperimentConfig c = small("density-profile");
    c.n_grid = {16};
    c.tau = 4.0;
    c.out = "/tmp/ternary_test_density.csv";
    const RunManifest man = run_experiment(c);
    write_outputs(man);
    std::ifstream data(c.out);
    CHECK(data.good());
    std::string header;
    std::getline(data, header);
    CHECK(header == man.csv_header);
    std::ifstream manifest(c.out + ".manifest.json");
    CHECK(manifest.good());
    const auto j = nlohmann::json::parse(manifest);
    CHECK(j["experiment"] == "density-profile");
    std::remove(c.out.c_str());
    std::remove((c.out + ".manifest.json").c_str());
}
