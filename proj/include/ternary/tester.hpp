#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ternary/convex.hpp"
#include "ternary/oracle.hpp"
#include "ternary/rng.hpp"

namespace ternary {

// Non-adaptive one-sided convexity tester. Each round draws a uniform y; if
// y answers "outside" and sits in the middle band, the round queries all of
// Up(y) within the band and rejects only on an exactly verified convex
// combination, so convex inputs can never be rejected.
struct TesterConfig {
    int n = 0;
    double epsilon = 0.0;
    double ell_raw = 0.0;  // sqrt(2 n ln(8/eps))
    double ell = 0.0;      // rounded up to the half-integer grid
    int rounds = 0;        // ceil(4/eps)
};

TesterConfig make_tester_config(int n, double epsilon);

struct TesterVerdict {
    bool accept = true;
    std::optional<ViolatingPair> witness;  // present and exact-verified on reject
    std::uint64_t queries_used = 0;
    int rounds_run = 0;
};

// The full query layout is a function of (seed, n, epsilon) alone: per round,
// the sampled point and its band-restricted upper shadow (sorted). Which
// batches actually get issued depends only on the answers at the sampled
// points.
struct TesterQueryPlan {
    std::vector<PointIndex> round_points;
    std::vector<std::vector<PointIndex>> round_batches;
};

TesterQueryPlan tester_query_plan(const TesterConfig& config, std::uint64_t seed);

TesterVerdict nonadaptive_onesided_test(MembershipOracle& oracle, const TesterConfig& config,
                                        std::uint64_t seed);

// Ceiling on batch size per round: C(n, k) 3^k at k = min(2 ceil(ell), n).
std::uint64_t tester_round_query_bound(int n, double ell);

// Union bound s^2 (5/9)^n on seeing a comparable pair among s uniform draws.
double sample_witness_probability_bound(int n, int s);

// Monte Carlo frequency of a comparable pair among s uniform samples.
double sample_witness_probability_mc(int n, int s, std::uint64_t trials, Rng& rng);

}  // namespace ternary
