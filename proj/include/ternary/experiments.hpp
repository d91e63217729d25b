#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ternary {

inline constexpr const char* kLibraryVersion = "0.1.0";

// One experiment invocation, fully determined by this struct: the master
// seed fixes every per-trial child seed, so reruns reproduce records
// bit-for-bit regardless of the thread count.
struct ExperimentConfig {
    std::string experiment;
    int n = 0;
    std::vector<int> n_grid;
    double epsilon = 0.1;
    std::uint64_t seed = 1;
    int trials = 10;
    std::string family = "tas";
    std::string out;             // output path ("" = stdout summary only)
    std::string format = "csv";  // csv | json
    unsigned threads = 0;        // 0 = hardware
    // experiment-specific knobs
    int m = 8;
    std::vector<int> m_grid;
    int k = 8;
    int degree_cap = 3;
    double tau = -1.0;
    double radius = -1.0;
    bool verify_gap = false;
};

struct RunManifest {
    ExperimentConfig config;
    std::string version = kLibraryVersion;
    double wall_ms = 0.0;
    bool pass = true;
    std::vector<std::string> assertions;  // one line per embedded check
    std::string csv_header;
    std::vector<std::string> csv_rows;    // per-trial records, deterministic
    std::vector<std::string> json_records;  // full run records (may carry timings)
    std::vector<std::pair<std::string, double>> summary;

    void note(bool ok, const std::string& what);
};

// Dispatch by config.experiment; throws std::invalid_argument on unknown
// names or out-of-range parameters (CLI exit code 2), returns pass=false when
// an embedded assertion fails (exit code 1).
RunManifest run_experiment(const ExperimentConfig& config);

// Data file (csv or json per config.format) plus a .manifest.json sidecar.
void write_outputs(const RunManifest& manifest);

std::string manifest_to_json(const RunManifest& manifest);

}  // namespace ternary
