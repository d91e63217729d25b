#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ternary/point_set.hpp"
#include "ternary/rational.hpp"

namespace ternary {

// Convex-combination witness: positive weights on support points summing to 1
// that reproduce the target exactly. At most dim+1 support points.
struct HullCertificate {
    std::vector<std::pair<PointIndex, Rational>> support;
};

struct HullResult {
    bool inside = false;
    HullCertificate certificate;  // populated when inside
};

// Exact decision of y in Conv(X) by rational linear feasibility.
HullResult in_hull(const TernaryPoint& y, const std::vector<TernaryPoint>& points);
HullResult in_hull_indices(PointIndex y, const std::vector<PointIndex>& points, int n);

// Same decision for candidate sets known to lie in Up(y); the rows for the
// nonzero coordinates of y collapse, leaving a (#zeros+1)-row system.
HullResult in_hull_up_candidates(PointIndex y, const std::vector<PointIndex>& candidates,
                                 int n);

// Replays the certificate with exact arithmetic: positive weights, sum 1,
// weighted coordinates equal to y.
bool verify_certificate(PointIndex y, const HullCertificate& cert, int n);

// Conv(S) intersected with the grid. Membership of an outside candidate y is
// decided against S restricted to the upper shadow of y, which is sound
// because a minimal convex-combination witness lies in Up(y).
PointSet hull_closure(const PointSet& s, unsigned threads = 1);

bool is_convex(const PointSet& s);

struct ViolatingPair {
    std::vector<PointIndex> points;  // subset of S whose hull captures y
    PointIndex y = 0;                // the captured point outside S
    bool minimal = false;
};

// none iff S is convex; otherwise a minimal pair, found by locating the first
// hull-closure point outside S and pruning the certificate support in
// ascending index order.
std::optional<ViolatingPair> find_minimal_violating_pair(const PointSet& s);

bool verify_violating_pair(const PointSet& s, const ViolatingPair& pair);

// All convex subsets of {0,+-1}^n; exponential, capped at n <= 2.
const std::vector<PointSet>& all_convex_sets(int n);

// Exact distance to convexity by exhaustive minimization; n <= 2.
Rational distance_to_convex_exact(const PointSet& s);

// Greedily packs point-disjoint colinear triples (x, y, z) with x, z in S,
// y = (x+z)/2 outside S, scanning midpoints by index and directions in
// canonical order. Each packed triple forces at least one membership change,
// so |L|/3 * 3^-n certifies a lower bound on the distance to convexity.
std::uint64_t pack_violating_triples(const PointSet& s);
Rational distance_lower_bound_triples(const PointSet& s);

// Upper bound via the closure of the middle-band restriction:
// T = closure(S sel Mid(ell)) is convex, so dist(S, T) >= distance to convexity.
Rational distance_upper_bound_closure(const PointSet& s, double ell, unsigned threads = 1);

// Points outside S in the middle band captured by the hull of S's middle-band
// part. This is the mass that drives the tester's per-round hit probability.
std::uint64_t closure_gap_count(const PointSet& s, double ell, unsigned threads = 1);

}  // namespace ternary
