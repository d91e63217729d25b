#include <cmath>

#include "doctest.h"
#include "ternary/convex.hpp"
#include "ternary/generators.hpp"
#include "ternary/influence.hpp"
#include "ternary/stats.hpp"
#include "ternary/sampling.hpp"
#include "ternary/talagrand.hpp"

using namespace ternary;

TEST_CASE("balls: degenerate radii and convexity") {
    CHECK(make_ball(0.0, 4).cardinality() == 0);
    CHECK(make_ball(5.0, 4).cardinality() == domain_size(4));
    for (int n = 2; n <= 5; ++n) {
        for (int r = 0; r <= n + 1; ++r) {
            CHECK(is_convex(make_ball(double(r), n)));
        }
    }
}

TEST_CASE("halfspace membership count at the origin threshold") {
    const int n = 5;
    const std::vector<double> ones(n, 1.0);
    const PointSet h = make_halfspace_set(ones, 0.0, n);
    std::uint64_t negative_sum = 0;
    for (PointIndex i = 0; i < domain_size(n); ++i) {
        int sum = 0;
        PointIndex t = i;
        for (int c = 0; c < n; ++c) {
            sum += trit_from_digit(unsigned(t % 3));
            t /= 3;
        }
        negative_sum += (sum < 0);
    }
    CHECK(h.cardinality() == negative_sum);
    CHECK(is_convex(h));
}

TEST_CASE("slab symmetry: anti-slab closed under negation") {
    Rng rng(2);
    const int n = 6;
    SlabSpec spec;
    spec.v = sample_fixed_weight(rng, n, 3);
    spec.tau = 1.0;
    const PointSet anti = make_antislab(spec, n);
    for (PointIndex i = 0; i < domain_size(n); ++i) {
        // negation swaps digits 1 and 2 in every coordinate
        PointIndex neg = 0, t = i;
        for (int c = 0; c < n; ++c) {
            const unsigned d = unsigned(t % 3);
            neg += pow3(c) * (d == 0 ? 0 : (d == 1 ? 2 : 1));
            t /= 3;
        }
        CHECK(anti.test(i) == anti.test(neg));
    }
}

TEST_CASE("truncated anti-slab respects its layer surgery") {
    Rng rng(3);
    const int n = 12;
    const TasSpec spec = TasSpec::canonical(n, rng);
    CHECK(weight(spec.v) == n / 2);
    const PointSet tas = make_tas(spec, n);
    const PointSet anti = make_antislab({spec.v, spec.tau}, n);
    for (PointIndex i = 0; i < domain_size(n); ++i) {
        const LayerTag layer = layer_classify(weight_of_index(i, n), n, spec.t);
        if (layer == LayerTag::Outer) CHECK_FALSE(tas.test(i));
        else if (layer == LayerTag::Inner) CHECK(tas.test(i));
        else CHECK(tas.test(i) == anti.test(i));
    }
}

TEST_CASE("truncated anti-slabs carry certified convexity violations") {
    Rng rng(4);
    const int n = 9;
    for (int trial = 0; trial < 3; ++trial) {
        const TasSpec spec = TasSpec::canonical(n, rng);
        const PointSet tas = make_tas(spec, n);
        CHECK(pack_violating_triples(tas) > 0);

        // any minimal witness must span a gap of more than tau along v
        auto pair = find_minimal_violating_pair(tas);
        REQUIRE(pair.has_value());
        std::int64_t best = 0;
        for (PointIndex p : pair->points) {
            std::int64_t dot = 0;
            PointIndex a = p, b = pair->y;
            for (int c = 0; c < n; ++c) {
                const int xa = trit_from_digit(unsigned(a % 3));
                const int xb = trit_from_digit(unsigned(b % 3));
                dot += std::int64_t(spec.v.coords[c]) * (xa - xb);
                a /= 3;
                b /= 3;
            }
            best = std::max(best, std::abs(dot));
        }
        CHECK(double(best) > spec.tau);
    }
}

TEST_CASE("sign-sum tails: degenerate thresholds") {
    for (int m : {3, 7, 10}) {
        CHECK(sign_sum_tail(m, double(-(m + 1))).to_double() == 1.0);
        CHECK(sign_sum_tail(m, double(m)).to_double() == 0.0);
    }
    // m=8: P[sum > 3] = P[sum >= 4] = (28 + 8 + 1)/256
    CHECK(sign_sum_tail(8, 3.0).to_double() == doctest::Approx(37.0 / 256.0).epsilon(1e-12));
}

TEST_CASE("density profile: band, finite ratio, growth past the stable regime") {
    const DensityProfile flat = density_profile(36, 6.0);
    CHECK(!flat.rows.empty());
    for (const auto& row : flat.rows) CHECK(std::abs(row.ell) <= 6.0);
    CHECK(flat.max_min_ratio >= 1.0);

    // pushing the threshold far out makes the level densities diverge
    const DensityProfile steep = density_profile(36, 18.0);
    CHECK(steep.max_min_ratio > flat.max_min_ratio);
}

TEST_CASE("random halfspace intersections are convex") {
    Rng rng(5);
    for (int trial = 0; trial < 4; ++trial) {
        Rng child = rng.child(std::uint64_t(trial));
        const RhiInstance inst = make_random_halfspace_intersection(5, child);
        CHECK(inst.k >= 1);
        CHECK(is_convex(inst.set));
        // oracle form agrees with the materialized set
        for (PointIndex i = 0; i < domain_size(5); i += 3)
            CHECK(inst.contains(decode(i, 5)) == inst.set.test(i));
    }
    // forcing a single constituent gives the complement of one halfspace
    Rng child = rng.child(99);
    RhiOverrides ov;
    ov.k = 1;
    const RhiInstance single = make_random_halfspace_intersection(6, child, ov);
    CHECK(single.k == 1);
    CHECK(is_convex(single.set));
    // exhaustive convexity once at n=6 as well
    Rng six = rng.child(100);
    CHECK(is_convex(make_random_halfspace_intersection(6, six).set));
}

TEST_CASE("random halfspace intersections show no violating triples at n=12") {
    Rng rng(55);
    const int n = 12;
    const RhiInstance inst = make_random_halfspace_intersection(n, rng, {}, false);
    int violations = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        // random grid triple with a grid midpoint: direction supported on the
        // midpoint's zero coordinates
        TernaryPoint mid = sample_uniform(rng, n);
        TernaryPoint lo = mid, hi = mid;
        bool nonzero = false;
        for (int c = 0; c < n; ++c) {
            if (mid.coords[c] != 0) continue;
            const int d = rng.trit();
            lo.coords[c] = -d;
            hi.coords[c] = d;
            nonzero = nonzero || (d != 0);
        }
        if (!nonzero) continue;
        if (inst.contains(lo) && inst.contains(hi) && !inst.contains(mid)) ++violations;
    }
    CHECK(violations == 0);
}

TEST_CASE("random halfspace threshold is the exact tail quantile") {
    Rng rng(6);
    const int n = 12;
    const RhiInstance inst = make_random_halfspace_intersection(n, rng);
    const int m0 = (2 * n) / 3;
    const double eps = std::pow(2.0, -std::sqrt(double(n)));
    CHECK(sign_sum_tail(m0, double(inst.tau)).to_double() >= eps);
    CHECK(sign_sum_tail(m0, double(inst.tau + 1)).to_double() < eps);
    CHECK(inst.rho == sign_sum_tail(m0, double(inst.tau)).to_double());
}

TEST_CASE("DNF instance: regions partition the band") {
    Rng rng(7);
    const int n = 9;
    const TalagrandInstance inst = sample_dyes(n, rng);
    CHECK(inst.layout.params.num_terms == 27);
    CHECK(inst.layout.params.term_weight == 3);

    std::uint64_t band_points = 0;
    for (PointIndex i = 0; i < domain_size(n); ++i) {
        const bool in_band =
            layer_classify(weight_of_index(i, n), n, inst.layout.params.band) == LayerTag::Middle;
        CHECK((inst.layout.region[i] != kRegionOffBand) == in_band);
        band_points += in_band;
    }
    CHECK(inst.layout.unique_count() + inst.layout.none_count() + inst.layout.multi_count() == band_points);

    // off-band membership: inner in, outer out
    for (PointIndex i = 0; i < domain_size(n); ++i) {
        const LayerTag layer = layer_classify(weight_of_index(i, n), n, inst.layout.params.band);
        if (layer == LayerTag::Inner) CHECK(inst.set.test(i));
        if (layer == LayerTag::Outer) CHECK_FALSE(inst.set.test(i));
    }
}

TEST_CASE("yes-side draws are non-increasing and convex") {
    Rng rng(8);
    const int n = 9;
    const TalagrandInstance inst = sample_dyes(n, rng);

    // outward monotonicity via cover edges: flipping any zero of a
    // non-member keeps it outside the set
    for_each_edge(n, [&](const Edge& e) {
        if (!inst.set.test(e.from)) CHECK_FALSE(inst.set.test(e.to));
    });

    CHECK(is_convex(inst.set));
}

TEST_CASE("no-side draws random-fill the unique regions") {
    Rng rng(9);
    const int n = 9;
    const TalagrandInstance inst = sample_dno(n, rng);
    // none-region points are always members, multi always non-members
    for (PointIndex i = 0; i < domain_size(n); ++i) {
        if (inst.layout.region[i] == kRegionNone) CHECK(inst.set.test(i));
        if (inst.layout.region[i] == kRegionMulti) CHECK_FALSE(inst.set.test(i));
    }
}

TEST_CASE("unique-region membership is a fair coin under both draws") {
    const int n = 9;
    Rng term_rng(1234);
    const TalagrandParams params = TalagrandParams::defaults(n);
    const TalagrandLayout layout = make_layout(n, sample_terms(n, params, term_rng), params);

    // a fixed point of some populated unique region
    PointIndex target = 0;
    bool found = false;
    for (PointIndex i = 0; i < domain_size(n) && !found; ++i) {
        if (layout.region[i] >= 0) {
            target = i;
            found = true;
        }
    }
    REQUIRE(found);

    const std::uint64_t draws = 1000;
    std::uint64_t yes_in = 0, no_in = 0;
    Rng coins(77);
    for (std::uint64_t t = 0; t < draws; ++t) {
        Rng a = coins.child(2 * t), b = coins.child(2 * t + 1);
        yes_in += assemble_yes(layout, a).set.test(target);
        no_in += assemble_no(layout, b).set.test(target);
    }
    CHECK(binomial_gate(yes_in, draws, 0.5, 4.0));
    CHECK(binomial_gate(no_in, draws, 0.5, 4.0));
}

TEST_CASE("collision statistic stays under its bound") {
    Rng rng(11);
    const auto rep = collision_statistic(9, 2, rng, 10000);
    CHECK(rep.bound == doctest::Approx(100.0 / 27.0));
    CHECK(rep.estimate <= rep.bound);

    // monotone in the sample count
    Rng rng2(12);
    const auto rep5 = collision_statistic(9, 5, rng2, 4000);
    Rng rng3(12);
    const auto rep2 = collision_statistic(9, 2, rng3, 4000);
    CHECK(rep5.estimate + 0.02 >= rep2.estimate);
    CHECK_THROWS(collision_statistic(9, 1, rng, 10));
}

TEST_CASE("single-bucket mass stays under 5/N") {
    Rng rng(13);
    const auto rep = bucket_probability(9, rng, 20000);
    CHECK(rep.bound == doctest::Approx(5.0 / 27.0));
    CHECK(rep.estimate <= rep.bound);
}
