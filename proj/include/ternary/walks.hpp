#pragma once

#include <cstdint>
#include <vector>

#include "ternary/bigint.hpp"
#include "ternary/rational.hpp"
#include "ternary/rng.hpp"

namespace ternary {

// Step magnitudes for a one-dimensional walk. The distinct-subset-sum
// property (no two disjoint subsets share a sum) guarantees the walk never
// sits exactly at zero, which the fluctuation statistics below rely on.
struct StepVector {
    std::vector<double> steps;
    bool dss_certified = false;

    int length() const { return int(steps.size()); }
};

// All-ones steps nudged by U[-delta, delta] with delta = 1/(3m); the
// perturbation is almost surely DSS. Exhaustive certification is a separate
// call (it costs 3^m) and is run at fixture points rather than per draw;
// consumers audit encountered walk values for exact zeros.
StepVector dss_perturb(int m, Rng& rng);

// Exhaustive check over all 3^m signed subset sums; m <= 18.
bool dss_check_exhaustive(const std::vector<double>& steps);

struct WalkTrace {
    std::vector<double> w;  // values W(0..m)

    int length() const { return int(w.size()) - 1; }
};

// W(t) = a + sum_{i<=t} signs[i] * steps[perm[i]].
WalkTrace walk_eval(const StepVector& x, double a, const std::vector<int>& perm,
                    const std::vector<int>& signs);

// Pointwise maximum of constituent walks sharing one permutation and sign
// vector; the coupling is the whole point.
WalkTrace max_walk(const std::vector<StepVector>& xs, const std::vector<double>& starts,
                   const std::vector<int>& perm, const std::vector<int>& signs);

WalkTrace max_of_traces(const std::vector<WalkTrace>& traces);

// Sign-change taxonomy of a walk. Zero counts as nonnegative throughout:
//   downcrossing at t:  W(t) <  0 <= W(t-1)
//   upcrossing   at t:  W(t) >= 0 >  W(t-1)
//   crossing count c = c_down + c_up, counted directly from sign changes
//   level returns (l_down): one per nonnegative reference (the start value if
//     W(0) >= 0, then each upcrossing value), fired the first time the walk
//     drops strictly below that reference
//   level decreases / increases (s_down / s_up): the inductive chains whose
//     references move to the walk value at each fired event, switching to the
//     next up/downcrossing whenever the reference is on the wrong side of 0
//   z: times t >= 1 with W(t) in {0, +1, -1} (meant for integer-step walks)
struct CrossingStats {
    std::uint64_t c = 0;
    std::uint64_t c_down = 0;
    std::uint64_t c_up = 0;
    std::uint64_t l_down = 0;
    std::uint64_t s_down = 0;
    std::uint64_t s_up = 0;
    std::uint64_t z = 0;

    bool identities_hold() const {
        return c == c_down + c_up && c <= 2 * c_down + 1 && c_down <= l_down;
    }
};

CrossingStats crossing_stats(const WalkTrace& trace);

// Probability that a DSS walk stays strictly positive for m steps:
// g(m) = C(2m, m) / 4^m, with g(0) = 1.
Rational sparre_andersen_g_exact(int m);  // m <= 31
double sparre_andersen_g(int m);
std::vector<double> sparre_andersen_g_table(int m);

// Monte Carlo frequency of the all-positive event over random (perm, signs);
// rejects step vectors that are not DSS-certified.
double all_positive_probability(const StepVector& x, std::uint64_t trials, Rng& rng);

// Inter-record law P[R = t] = g(t-1) - g(t), sampled by inverse CDF on the
// exact tail P[R > t] = g(t). Returns cap+1 when R exceeds cap.
int sample_interrecord_capped(Rng& rng, int cap, const std::vector<double>& g_table);

// Renewal count: the number of partial sums of i.i.d. R's landing in [1, m].
int sample_renewal_count(int m, Rng& rng, const std::vector<double>& g_table);

// E[Q^(j)] for j = 0..m by the exact dynamic program
// E[Q^(j)] = sum_t P[R=t] (1 + E[Q^(j-t)]).
std::vector<double> expected_renewal_counts(int m);

}  // namespace ternary
