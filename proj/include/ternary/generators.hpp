#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ternary/bigint.hpp"
#include "ternary/point_set.hpp"
#include "ternary/rng.hpp"

namespace ternary {

// Halfspace membership is the strict side <v,x> < tau.
struct Halfspace {
    std::vector<double> normal;
    double tau = 0.0;

    bool contains(const TernaryPoint& x) const;
};

PointSet make_halfspace_set(const std::vector<double>& normal, double tau, int n);

// Ball of squared radius r: weight(x) < r.
PointSet make_ball(double r, int n);

// |<v,x>| <= tau, with a ternary normal. The anti-slab is the complement.
struct SlabSpec {
    TernaryPoint v;
    double tau = 1.0;
};

PointSet make_slab(const SlabSpec& spec, int n);
PointSet make_antislab(const SlabSpec& spec, int n);

// Truncated anti-slab: anti-slab, plus all inner-layer points, minus all
// outer-layer points. The canonical instance uses |v| = floor(n/2) nonzeros,
// tau = sqrt(n), truncation t = 0.7 sqrt(n).
struct TasSpec {
    TernaryPoint v;
    double tau = 0.0;
    double t = 0.0;

    static TasSpec canonical(int n, Rng& rng);
};

PointSet make_tas(const TasSpec& spec, int n);

// Density of the coordinate-sum tail above tau on each admissible weight
// level of the middle band, from exact fair-sign binomial tails.
struct DensityRow {
    int weight;      // level, an integer near 2n/3
    double ell;      // weight - 2n/3
    double rho;      // P[sum of `weight` fair signs > tau]
    double log2_rho; // exact log2, finite only when rho > 0
};

struct DensityProfile {
    std::vector<DensityRow> rows;
    double max_rho = 0.0;
    double min_rho = 0.0;  // over rows with rho > 0
    double max_min_ratio = 0.0;
};

DensityProfile density_profile(int n, double tau);

// Exact tail P[sum of m fair signs > tau] as a dyadic rational.
Dyadic sign_sum_tail(int m, double tau);

// Intersection of the complements of k random halfspaces at threshold tau,
// where tau is picked as the largest integer whose fair-sign tail over
// floor(2n/3) coordinates still carries mass 2^-sqrt(n), and k is inversely
// proportional to that mass. High-influence convex instance.
struct RhiOverrides {
    std::optional<int> tau;
    std::optional<int> k;
    double c1 = 5.0;
};

struct RhiInstance {
    int n = 0;
    int tau = 0;
    double rho = 0.0;  // exact tail mass at tau
    int k = 1;
    std::vector<std::vector<int>> normals;  // k vectors in {-1,+1}^n
    PointSet set;

    bool contains(const TernaryPoint& x) const;  // oracle form, any n
};

RhiInstance make_random_halfspace_intersection(int n, Rng& rng,
                                               const RhiOverrides& overrides = {},
                                               bool materialize = true);

}  // namespace ternary
