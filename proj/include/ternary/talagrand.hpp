#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ternary/point_set.hpp"
#include "ternary/rng.hpp"

namespace ternary {

// One DNF term: a multiset of (coordinate, sign) constraints. A point
// satisfies the term when every constraint holds, i.e. the term's effective
// point lies below it in the outward order. Repeated coordinates are kept
// as drawn: conflicting signs make the term unsatisfiable, agreeing signs
// collapse to a lower effective weight.
struct DnfTerm {
    struct Constraint {
        int coord;
        int sign;  // +1 or -1
    };
    std::vector<Constraint> constraints;

    bool satisfied_by(const TernaryPoint& x) const {
        for (const auto& c : constraints) {
            if (x.coords[c.coord] != c.sign) return false;
        }
        return true;
    }
};

struct TalagrandParams {
    double band = 0.0;        // middle band half-width
    int term_weight = 0;      // constraints per term
    std::uint64_t num_terms = 0;

    static TalagrandParams defaults(int n, std::optional<std::uint64_t> term_cap = {});
};

// Region labels per point, band only: kNone = satisfies no term, kMulti =
// satisfies two or more, otherwise the unique term id.
constexpr std::int32_t kRegionNone = -1;
constexpr std::int32_t kRegionMulti = -2;
constexpr std::int32_t kRegionOffBand = -3;

// Terms plus the region map they induce; everything about a draw that does
// not depend on the membership coins.
struct TalagrandLayout {
    int n = 0;
    TalagrandParams params;
    std::vector<DnfTerm> terms;
    std::vector<std::int32_t> region;  // per PointIndex

    std::uint64_t unique_count() const;
    std::uint64_t none_count() const;
    std::uint64_t multi_count() const;
};

struct TalagrandInstance {
    TalagrandLayout layout;
    bool yes_side = false;              // drawn from the always-convex family?
    std::vector<std::uint8_t> term_on;  // yes-side coin per term
    PointSet set;
};

std::vector<DnfTerm> sample_terms(int n, const TalagrandParams& params, Rng& rng);
TalagrandLayout make_layout(int n, std::vector<DnfTerm> terms, const TalagrandParams& params);

// Membership coins per unique-satisfier region: one shared coin per term on
// the yes side, an independent coin per point on the no side.
TalagrandInstance assemble_yes(const TalagrandLayout& layout, Rng& rng);
TalagrandInstance assemble_no(const TalagrandLayout& layout, Rng& rng);

TalagrandInstance sample_dyes(int n, Rng& rng, std::optional<TalagrandParams> params = {});
TalagrandInstance sample_dno(int n, Rng& rng, std::optional<TalagrandParams> params = {});

// Unique-satisfier id of a single point against a term list: kRegionOffBand
// for points outside the middle band, otherwise kRegionNone / kRegionMulti /
// the term id. Works directly from the point, no domain scan.
std::int32_t classify_point(const TernaryPoint& x, const std::vector<DnfTerm>& terms,
                            int n, double band);

struct CollisionReport {
    double estimate = 0.0;  // P[ some two of s samples share a unique-term region ]
    double bound = 0.0;     // 25 s^2 / N
    std::uint64_t trials = 0;
};

// Fresh terms every trial; collision means two samples land in the same U_i.
CollisionReport collision_statistic(int n, int s, Rng& rng, std::uint64_t trials,
                                    std::optional<TalagrandParams> params = {});

// Monte Carlo estimate of P[y in U_i] for a fixed term id, fresh terms and a
// fresh uniform point per trial; compared against 5/N.
struct BucketReport {
    double estimate = 0.0;
    double bound = 0.0;
    std::uint64_t trials = 0;
};

BucketReport bucket_probability(int n, Rng& rng, std::uint64_t trials,
                                std::optional<TalagrandParams> params = {});

}  // namespace ternary
