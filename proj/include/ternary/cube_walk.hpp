#pragma once

#include <functional>
#include <vector>

#include "ternary/core.hpp"
#include "ternary/rng.hpp"
#include "ternary/sampling.hpp"
#include "ternary/walks.hpp"

namespace ternary {

using MembershipFn = std::function<bool(const TernaryPoint&)>;

// Outward walk over the cube: start in the middle band, flip m zero
// coordinates to random signs one at a time, and return a uniformly chosen
// step as an edge. Band width ell = round(sqrt(2 n ln n)), walk length
// m = round(sqrt(n / ln n)), both at least 1.
struct CubeWalkParams {
    int n = 0;
    double ell = 0.0;
    int m = 1;

    static CubeWalkParams standard(int n);
};

struct CubeWalkRealization {
    TernaryPoint start;             // X^(0)
    std::vector<int> flip_coords;   // zero coordinates of the start, in flip order
    std::vector<int> flip_signs;    // +-1 per step
    std::vector<TernaryPoint> path; // X^(0) .. X^(m)
    int chosen_step = 1;            // s, uniform in [1, m]
    bool crossed = false;           // membership differs across the chosen edge
    int rejections = 0;             // restarts due to fewer than m zeros
};

CubeWalkRealization cube_walk_sample(const CubeWalkParams& params, const MembershipFn& member,
                                     Rng& rng, const MiddleSampler& sampler);

// Intersection of strict halfspaces with real (perturbed) normals; the shape
// every convex set reduces to for the walk argument.
struct SmoothHalfspaces {
    int n = 0;
    std::vector<std::vector<double>> normals;
    std::vector<double> taus;

    bool contains(const TernaryPoint& x) const;
    double margin(const TernaryPoint& x, std::size_t i) const;  // <v_i, x> - tau_i
};

// k random sign vectors, each coordinate nudged by U[-delta, delta] with
// delta = 1/(3n) so the normals have the distinct-subset-sum property almost
// surely; shared threshold tau.
SmoothHalfspaces make_smooth_halfspaces(int n, int k, double tau, Rng& rng);

struct WalkReduction {
    WalkTrace max_trace;            // max over per-halfspace scalar walks
    std::vector<double> starts;     // a(v) = <v, X0> - tau(v)
    bool membership_equivalence = true;  // X(s) in S  <=>  max-walk < 0, all s
    bool crossing_equivalence = true;    // crossed at s <=> sign change at s
};

// Couples the cube walk to the scalar walks of each halfspace restricted to
// the walked coordinates and checks both equivalences on the realization.
WalkReduction halfspace_walk_reduction(const SmoothHalfspaces& hs,
                                       const CubeWalkRealization& realization);

// Exact per-point law of X^(s): uniform start over the admissible part of the
// band, divided by 2^s and the binomial ratio of the level sizes.
double cube_walk_point_probability(const CubeWalkParams& params, int weight_at_s, int s);

}  // namespace ternary
