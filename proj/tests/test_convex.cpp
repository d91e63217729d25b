#include <sstream>

#include "doctest.h"
#include "ternary/convex.hpp"
#include "ternary/core.hpp"
#include "ternary/rng.hpp"

using namespace ternary;

namespace {

PointSet set_of(int n, std::initializer_list<TernaryPoint> pts) {
    PointSet s(n);
    for (const auto& p : pts) s.insert(p);
    return s;
}

// the two-dimensional three-point set whose hull captures the origin
PointSet triangle2() {
    return set_of(2, {TernaryPoint{-1, 1}, TernaryPoint{1, 0}, TernaryPoint{0, -1}});
}

PointSet random_set(int n, double density, Rng& rng) {
    PointSet s(n);
    for (PointIndex i = 0; i < domain_size(n); ++i) {
        if (rng.uniform01() < density) s.set(i);
    }
    return s;
}

}  // namespace

TEST_CASE("in_hull: membership gives the unit certificate") {
    const TernaryPoint y{1, -1};
    auto res = in_hull(y, {TernaryPoint{0, 0}, y});
    CHECK(res.inside);
    REQUIRE(res.certificate.support.size() == 1);
    CHECK(res.certificate.support[0].first == encode(y));
    CHECK(res.certificate.support[0].second == Rational(1));
}

TEST_CASE("in_hull: the origin inside the balanced triangle, with exact thirds") {
    const std::vector<TernaryPoint> x = {TernaryPoint{-1, 1}, TernaryPoint{1, 0},
                                         TernaryPoint{0, -1}};
    auto res = in_hull(TernaryPoint{0, 0}, x);
    REQUIRE(res.inside);
    REQUIRE(res.certificate.support.size() == 3);
    for (const auto& [idx, lambda] : res.certificate.support) {
        CHECK(lambda == Rational(1, 3));
        (void)idx;
    }
    CHECK(verify_certificate(0, res.certificate, 2));
}

TEST_CASE("in_hull: one-sided triangles do not capture the origin") {
    // second coordinates all >= 0 here, so no cancellation is possible
    auto res = in_hull(TernaryPoint{0, 0},
                       {TernaryPoint{-1, 1}, TernaryPoint{1, 0}, TernaryPoint{0, 1}});
    CHECK_FALSE(res.inside);
    // both hull points share first coordinate 1
    auto res2 = in_hull(TernaryPoint{0, 0}, {TernaryPoint{1, 1}, TernaryPoint{1, -1}});
    CHECK_FALSE(res2.inside);
}

TEST_CASE("in_hull rejects empty input") {
    CHECK_THROWS(in_hull(TernaryPoint{0}, {}));
}

TEST_CASE("certificates replay exactly on random instances") {
    Rng rng(17);
    const int n = 4;
    int inside_seen = 0;
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<PointIndex> pts;
        const int k = 2 + int(rng.below(8));
        for (int i = 0; i < k; ++i) pts.push_back(rng.below(domain_size(n)));
        const PointIndex y = rng.below(domain_size(n));
        auto res = in_hull_indices(y, pts, n);
        if (res.inside) {
            ++inside_seen;
            CHECK(verify_certificate(y, res.certificate, n));
            CHECK(res.certificate.support.size() <= std::size_t(n) + 1);
        }
    }
    CHECK(inside_seen > 10);
}

TEST_CASE("up-restriction soundness: in_hull(y, S) == in_hull(y, S cap Up(y))") {
    Rng rng(23);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 2 + int(rng.below(4));  // n in 2..5
        const PointSet s = random_set(n, 0.35, rng);
        const PointIndex y = rng.below(domain_size(n));
        if (s.test(y)) continue;
        std::vector<PointIndex> all, up;
        for (PointIndex i = 0; i < domain_size(n); ++i) {
            if (!s.test(i)) continue;
            all.push_back(i);
            if (poset_leq_idx(y, i, n)) up.push_back(i);
        }
        if (all.empty()) continue;
        const bool full = in_hull_indices(y, all, n).inside;
        const bool restricted = up.empty() ? false : in_hull_indices(y, up, n).inside;
        CHECK(full == restricted);
    }
}

TEST_CASE("hull_closure: fixed examples") {
    // convex inputs are fixed points
    PointSet ball(2);
    for (PointIndex i = 0; i < domain_size(2); ++i) {
        if (weight_of_index(i, 2) < 2) ball.set(i);
    }
    CHECK(hull_closure(ball) == ball);

    const PointSet full = PointSet(2).complement();
    CHECK(hull_closure(full) == full);

    PointSet tri = triangle2();
    PointSet expect = tri;
    expect.set(0);  // origin
    CHECK(hull_closure(tri) == expect);
}

TEST_CASE("hull_closure is a closure operator on random sets") {
    Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + int(rng.below(3));  // 2..4
        const PointSet s = random_set(n, 0.3, rng);
        const PointSet c = hull_closure(s);
        // extensive
        CHECK(s.intersect(c) == s);
        // idempotent
        CHECK(hull_closure(c) == c);
        // monotone: add a point to s, closure can only grow
        PointSet bigger = s;
        bigger.set(rng.below(domain_size(n)));
        const PointSet c2 = hull_closure(bigger);
        CHECK(c.intersect(c2) == c);
    }
}

TEST_CASE("is_convex basics") {
    for (PointIndex i = 0; i < domain_size(2); ++i) {
        PointSet singleton(2);
        singleton.set(i);
        CHECK(is_convex(singleton));
    }
    CHECK_FALSE(is_convex(triangle2()));
    CHECK(is_convex(PointSet(3)));               // empty
    CHECK(is_convex(PointSet(3).complement()));  // full
}

TEST_CASE("minimal violating pairs") {
    CHECK_FALSE(find_minimal_violating_pair(PointSet(2).complement()).has_value());

    const PointSet tri = triangle2();
    auto pair = find_minimal_violating_pair(tri);
    REQUIRE(pair.has_value());
    CHECK(pair->y == 0);
    CHECK(pair->points.size() == 3);  // pruning cannot drop any of the three
    CHECK(pair->minimal);
    CHECK(verify_violating_pair(tri, *pair));

    // pairs found on random non-convex sets always verify, including the
    // upper-shadow containment required of minimal pairs
    Rng rng(41);
    int found = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + int(rng.below(3));
        const PointSet s = random_set(n, 0.4, rng);
        auto vp = find_minimal_violating_pair(s);
        CHECK(vp.has_value() != is_convex(s));
        if (vp) {
            ++found;
            CHECK(verify_violating_pair(s, *vp));
            for (PointIndex p : vp->points) CHECK(poset_leq_idx(vp->y, p, n));
        }
    }
    CHECK(found > 10);
}

TEST_CASE("exact distance to convexity at n<=2") {
    CHECK(distance_to_convex_exact(triangle2()) == Rational(1, 9));
    CHECK(distance_to_convex_exact(set_of(1, {TernaryPoint{-1}, TernaryPoint{1}})) ==
          Rational(1, 3));
    PointSet convex1 = set_of(1, {TernaryPoint{0}, TernaryPoint{1}});
    CHECK(distance_to_convex_exact(convex1) == Rational(0));
    CHECK_THROWS(distance_to_convex_exact(PointSet(3)));
}

TEST_CASE("triple packer fixed examples") {
    const PointSet pm = set_of(1, {TernaryPoint{-1}, TernaryPoint{1}});
    CHECK(pack_violating_triples(pm) == 1);
    CHECK(distance_lower_bound_triples(pm) == Rational(1, 9));

    CHECK(pack_violating_triples(set_of(1, {TernaryPoint{0}, TernaryPoint{1}})) == 0);
    CHECK(pack_violating_triples(triangle2()) == 0);  // no grid midpoint pairs
}

TEST_CASE("bound sandwich lower <= exact <= upper over all n<=2 sets") {
    for (int n = 1; n <= 2; ++n) {
        const std::uint64_t size = domain_size(n);
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << size); ++mask) {
            PointSet s(n);
            for (std::uint64_t b = 0; b < size; ++b) {
                if ((mask >> b) & 1) s.set(b);
            }
            const Rational lo = distance_lower_bound_triples(s);
            const Rational mid = distance_to_convex_exact(s);
            const Rational hi = distance_upper_bound_closure(s, double(n));
            CHECK(lo <= mid);
            CHECK(mid <= hi);
            if (is_convex(s)) {
                CHECK(mid == Rational(0));
                CHECK(hi == Rational(0));
            }
        }
    }
}

TEST_CASE("closure upper bound on the triangle with the full band") {
    CHECK(distance_upper_bound_closure(triangle2(), 2.0) == Rational(1, 9));
}
