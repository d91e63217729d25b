#include "ternary/core.hpp"

#include <cmath>

namespace ternary {

std::vector<std::uint64_t> layer_sizes(int n) {
    std::vector<std::uint64_t> sizes(n + 1, 0);
    // C(n,w) * 2^w via the multiplicative recurrence
    std::uint64_t binom = 1;
    std::uint64_t p2 = 1;
    for (int w = 0; w <= n; ++w) {
        sizes[w] = binom * p2;
        if (w < n) {
            binom = binom * std::uint64_t(n - w) / std::uint64_t(w + 1);
            p2 *= 2;
        }
    }
    return sizes;
}

ConcentrationReport concentration_check(int n, double tau) {
    const auto sizes = layer_sizes(n);
    std::uint64_t outside = 0;
    for (int w = 0; w <= n; ++w) {
        if (layer_classify(w, n, tau) != LayerTag::Middle) outside += sizes[w];
    }
    ConcentrationReport r;
    r.exact_mass = Rational(std::int64_t(outside), std::int64_t(domain_size(n)));
    r.bound = 2.0 * std::exp(-(tau * tau) / (2.0 * n));
    r.holds = r.exact_mass.to_double() <= r.bound;
    return r;
}

Rational up_pair_probability(int n) {
    // 5 of the 9 per-coordinate pairs are comparable, independently
    std::int64_t num = 1, den = 1;
    for (int i = 0; i < n; ++i) {
        num *= 5;
        den *= 9;
    }
    return Rational(num, den);
}

}  // namespace ternary
