#include <cmath>
#include <map>

#include "doctest.h"
#include "ternary/bigint.hpp"
#include "ternary/cube_walk.hpp"
#include "ternary/generators.hpp"
#include "ternary/stats.hpp"

using namespace ternary;

TEST_CASE("walk parameters at n=9") {
    const CubeWalkParams p = CubeWalkParams::standard(9);
    CHECK(p.ell == 6.0);  // round(sqrt(18 ln 9))
    CHECK(p.m == 2);      // round(sqrt(9 / ln 9))
    CHECK_THROWS(CubeWalkParams::standard(2));
}

TEST_CASE("each step flips one zero outward") {
    const int n = 9;
    const CubeWalkParams p = CubeWalkParams::standard(n);
    const MiddleSampler sampler(n, p.ell);
    Rng rng(1);
    const PointSet ball = make_ball(6.0, n);
    const MembershipFn member = [&](const TernaryPoint& x) { return ball.contains(x); };
    for (int trial = 0; trial < 200; ++trial) {
        const CubeWalkRealization real = cube_walk_sample(p, member, rng, sampler);
        REQUIRE(int(real.path.size()) == p.m + 1);
        for (int s = 1; s <= p.m; ++s) {
            CHECK(weight(real.path[std::size_t(s)]) ==
                  weight(real.path[std::size_t(s) - 1]) + 1);
            CHECK(poset_leq(real.path[std::size_t(s) - 1], real.path[std::size_t(s)]));
        }
        CHECK(real.chosen_step >= 1);
        CHECK(real.chosen_step <= p.m);
        const bool crossed = member(real.path[std::size_t(real.chosen_step) - 1]) !=
                             member(real.path[std::size_t(real.chosen_step)]);
        CHECK(real.crossed == crossed);
    }
}

TEST_CASE("level-ratio identity behind the step law") {
    // C(w,s) / C(n-w+s, s) == C(n, w-s) / C(n, w), exactly
    for (int n = 3; n <= 14; ++n) {
        for (int w = 1; w <= n; ++w) {
            for (int s = 1; s <= std::min(w, 4); ++s) {
                const BigUint lhs = big_binomial(unsigned(w), unsigned(s)) *
                                    big_binomial(unsigned(n), unsigned(w));
                const BigUint rhs = big_binomial(unsigned(n - w + s), unsigned(s)) *
                                    big_binomial(unsigned(n), unsigned(w - s));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("per-point step law matches empirical frequencies at n=9") {
    const int n = 9;
    const CubeWalkParams p = CubeWalkParams::standard(n);
    REQUIRE(p.m == 2);
    const MiddleSampler sampler(n, p.ell);
    Rng rng(2);
    const MembershipFn member = [](const TernaryPoint&) { return true; };

    const std::uint64_t trials = 400000;
    std::map<PointIndex, std::uint64_t> count_s1, count_s2;
    std::vector<std::uint64_t> weight_s1(std::size_t(n) + 1, 0), weight_s2(std::size_t(n) + 1, 0);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const CubeWalkRealization real = cube_walk_sample(p, member, rng, sampler);
        const PointIndex z1 = encode(real.path[1]), z2 = encode(real.path[2]);
        ++count_s1[z1];
        ++count_s2[z2];
        ++weight_s1[std::size_t(weight(real.path[1]))];
        ++weight_s2[std::size_t(weight(real.path[2]))];
    }

    // weight-class gates: P[weight(X^(s)) = w] = (#points of weight w) * p(w, s)
    const auto sizes = layer_sizes(n);
    for (int s = 1; s <= 2; ++s) {
        const auto& hist = (s == 1) ? weight_s1 : weight_s2;
        for (int w = 0; w <= n; ++w) {
            const double per_point = cube_walk_point_probability(p, w, s);
            const double class_p = per_point * double(sizes[std::size_t(w)]);
            CHECK(binomial_gate(hist[std::size_t(w)], trials, class_p, 4.0));
        }
    }

    // spot-check individual points with enough expected mass
    int checked = 0;
    for (const auto& [idx, cnt] : count_s2) {
        const double pp = cube_walk_point_probability(p, weight_of_index(idx, n), 2);
        if (pp * double(trials) < 40.0) continue;
        CHECK(binomial_gate(cnt, trials, pp, 4.0));
        if (++checked >= 25) break;
    }
    CHECK(checked >= 10);
}

TEST_CASE("halfspace reduction: membership and crossing equivalences") {
    const int n = 12, k = 4;
    const CubeWalkParams p = CubeWalkParams::standard(n);
    const MiddleSampler sampler(n, p.ell);
    Rng rng(3);
    const SmoothHalfspaces hs = make_smooth_halfspaces(n, k, std::sqrt(double(n)), rng);
    const MembershipFn member = [&](const TernaryPoint& x) { return hs.contains(x); };

    for (int trial = 0; trial < 2000; ++trial) {
        const CubeWalkRealization real = cube_walk_sample(p, member, rng, sampler);
        const WalkReduction red = halfspace_walk_reduction(hs, real);
        CHECK(red.membership_equivalence);
        CHECK(red.crossing_equivalence);
        // start offsets reproduce the margins exactly
        for (std::size_t i = 0; i < hs.normals.size(); ++i)
            CHECK(red.starts[i] == hs.margin(real.start, i));
        // the chosen edge's crossing indicator agrees with the walk's flip
        const int s = real.chosen_step;
        const bool flip = (red.max_trace.w[std::size_t(s)] >= 0.0) !=
                          (red.max_trace.w[std::size_t(s) - 1] >= 0.0);
        CHECK(real.crossed == flip);
    }
}

TEST_CASE("single halfspace: crossings equal scalar sign changes") {
    const int n = 12;
    const CubeWalkParams p = CubeWalkParams::standard(n);
    const MiddleSampler sampler(n, p.ell);
    Rng rng(4);
    const SmoothHalfspaces hs = make_smooth_halfspaces(n, 1, 0.5, rng);
    const MembershipFn member = [&](const TernaryPoint& x) { return hs.contains(x); };
    for (int trial = 0; trial < 1000; ++trial) {
        const CubeWalkRealization real = cube_walk_sample(p, member, rng, sampler);
        const WalkReduction red = halfspace_walk_reduction(hs, real);
        CHECK(red.membership_equivalence);
        CHECK(red.crossing_equivalence);
    }
}

TEST_CASE("crossing rate of a convex oracle stays bounded against 1/sqrt(m)") {
    for (const int n : {36, 64, 100}) {
        const CubeWalkParams p = CubeWalkParams::standard(n);
        const MiddleSampler sampler(n, p.ell);
        Rng rng(5 + n);
        const RhiInstance inst = make_random_halfspace_intersection(n, rng, {}, false);
        const MembershipFn member = [&](const TernaryPoint& x) { return inst.contains(x); };
        std::uint64_t crossed = 0;
        const std::uint64_t trials = 8000;
        for (std::uint64_t t = 0; t < trials; ++t)
            crossed += cube_walk_sample(p, member, rng, sampler).crossed;
        const double rate = double(crossed) / double(trials);
        CHECK(rate * std::sqrt(double(p.m)) < 1.5);
    }
}
