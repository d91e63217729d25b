#include "ternary/influence.hpp"

namespace ternary {

std::uint64_t boundary_edge_count(const PointSet& s) {
    const int n = s.dim();
    const std::uint64_t size = s.domain();
    std::uint64_t count = 0;
    for (int c = 0; c < n; ++c) {
        const std::uint64_t p = pow3(c);
        for (PointIndex i = 0; i < size; ++i) {
            if ((i / p) % 3 != 0) continue;
            const bool v0 = s.test(i);
            count += (v0 != s.test(i + p));
            count += (v0 != s.test(i + 2 * p));
        }
    }
    return count;
}

Rational influence(const PointSet& s) {
    return Rational(std::int64_t(2 * boundary_edge_count(s)),
                    std::int64_t(domain_size(s.dim())));
}

Rational influence_naive(const PointSet& s) {
    const int n = s.dim();
    const std::uint64_t size = s.domain();
    std::uint64_t ordered = 0;
    for (PointIndex i = 0; i < size; ++i) {
        const bool vi = s.test(i);
        PointIndex t = i;
        for (int c = 0; c < n; ++c) {
            const std::uint64_t p = pow3(c);
            const unsigned d = unsigned(t % 3);
            t /= 3;
            if (d == 0) {
                ordered += (vi != s.test(i + p));
                ordered += (vi != s.test(i + 2 * p));
            } else {
                // the unique neighbour along this coordinate sets it to zero
                ordered += (vi != s.test(i - d * p));
            }
        }
    }
    return Rational(std::int64_t(ordered), std::int64_t(size));
}

}  // namespace ternary
