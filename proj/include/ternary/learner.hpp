#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ternary/point_set.hpp"
#include "ternary/rational.hpp"
#include "ternary/rng.hpp"

namespace ternary {

// Sign hypothesis over the low-degree slice of the basis: all frequencies of
// degree at most the cap, with empirically estimated coefficients.
struct LowDegreeHypothesis {
    int n = 0;
    int degree_cap = 0;
    std::vector<PointIndex> alphas;  // ascending, every degree <= cap
    std::vector<double> coeffs;      // estimate per alpha

    double evaluate_raw(const TernaryPoint& x) const;
    // sign with ties resolved to +1
    int evaluate(const TernaryPoint& x) const { return evaluate_raw(x) >= 0.0 ? 1 : -1; }

    PointSet positive_set() const;
};

std::vector<PointIndex> low_degree_alphas(int n, int degree_cap);
std::uint64_t low_degree_basis_size(int n, int degree_cap);

// s = ceil(3 |A|^2 / eps) labeled examples.
std::uint64_t low_degree_sample_size(int n, int degree_cap, double epsilon);

// Labeled example source; empty optional means the stream ran dry.
using ExampleStream = std::function<std::optional<std::pair<TernaryPoint, int>>()>;

ExampleStream uniform_examples_from_set(const PointSet& target, Rng& rng);
ExampleStream uniform_examples_from_fn(int n, std::function<bool(const TernaryPoint&)> member,
                                       Rng& rng);

// Consumes exactly low_degree_sample_size examples and averages
// label * basis(alpha, x) per retained frequency.
LowDegreeHypothesis low_degree_learn(const ExampleStream& examples, int n, double epsilon,
                                     int degree_cap);

// Exact disagreement fraction over the full domain.
Rational hypothesis_error_exact(const LowDegreeHypothesis& h, const PointSet& target);

// Testing by learning: learn at accuracy eps/4, replace the hypothesis by a
// convex set near it (exact minimizer for n <= 2, hull closure of the
// positive set beyond), then estimate the distance to the target from
// ceil(32/eps) fresh labeled samples and accept iff the estimate is at most
// eps/2.
struct LearningTestVerdict {
    bool accept = false;
    std::uint64_t samples_used = 0;
    double estimated_distance = 0.0;
    bool exact_projection = false;  // hull-closure proxy otherwise
};

LearningTestVerdict test_by_learning(const ExampleStream& examples, int n, double epsilon,
                                     int degree_cap);

}  // namespace ternary
