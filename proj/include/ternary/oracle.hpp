#pragma once

#include <cstdint>
#include <functional>
#include <utility>

#include "ternary/point_set.hpp"

namespace ternary {

// Membership access with an honest query counter: one increment per call,
// deterministic answers for a fixed underlying set.
class MembershipOracle {
public:
    using Fn = std::function<bool(PointIndex)>;

    MembershipOracle(int n, Fn fn) : n_(n), fn_(std::move(fn)) {}

    static MembershipOracle from_set(const PointSet& s) {
        return MembershipOracle(s.dim(), [s](PointIndex i) { return s.test(i); });
    }

    int dim() const { return n_; }

    bool query(PointIndex i) {
        ++count_;
        return fn_(i);
    }

    bool query_point(const TernaryPoint& x) { return query(encode(x)); }

    std::uint64_t queries() const { return count_; }
    void reset_counter() { count_ = 0; }

private:
    int n_;
    Fn fn_;
    std::uint64_t count_ = 0;
};

}  // namespace ternary
