#include "ternary/sampling.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "ternary/bigint.hpp"

namespace ternary {

TernaryPoint sample_uniform(Rng& rng, int n) {
    TernaryPoint x(n);
    for (int i = 0; i < n; ++i) x.coords[i] = rng.trit();
    return x;
}

MiddleSampler::MiddleSampler(int n, double tau) : n_(n) {
    for (int w = 0; w <= n; ++w) {
        if (in_middle(w, n, tau)) weights_.push_back(w);
    }
    if (weights_.empty())
        throw std::domain_error("MiddleSampler: empty middle band");
    // Level masses C(n,w) 2^w computed exactly, then normalized in log space
    // so that n in the hundreds stays finite.
    std::vector<long double> lnmass(weights_.size());
    long double lnmax = -1e30L;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        BigUint m = big_binomial(unsigned(n), unsigned(weights_[i]));
        lnmass[i] = m.ln() + weights_[i] * 0.6931471805599453094L;
        if (lnmass[i] > lnmax) lnmax = lnmass[i];
    }
    long double total = 0.0L;
    cum_.resize(weights_.size());
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        total += expl(lnmass[i] - lnmax);
        cum_[i] = double(total);
    }
    for (auto& c : cum_) c /= double(total);
    cum_.back() = 1.0;
}

TernaryPoint MiddleSampler::sample(Rng& rng) const {
    const double u = rng.uniform01();
    std::size_t lo = 0, hi = cum_.size() - 1;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (u < cum_[mid]) hi = mid;
        else lo = mid + 1;
    }
    return sample_fixed_weight(rng, n_, weights_[lo]);
}

TernaryPoint sample_fixed_weight(Rng& rng, int n, int w) {
    assert(w >= 0 && w <= n);
    TernaryPoint x(n);
    // partial Fisher-Yates over coordinate slots
    std::vector<int> slots(n);
    for (int i = 0; i < n; ++i) slots[i] = i;
    for (int i = 0; i < w; ++i) {
        const int j = i + int(rng.below(std::uint64_t(n - i)));
        std::swap(slots[i], slots[j]);
        x.coords[slots[i]] = rng.sign();
    }
    return x;
}

}  // namespace ternary
