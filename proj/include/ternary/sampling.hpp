#pragma once

#include <vector>

#include "ternary/core.hpp"
#include "ternary/rng.hpp"

namespace ternary {

TernaryPoint sample_uniform(Rng& rng, int n);

// Uniform sampler over the middle layers Mid(tau). Two-stage: pick a weight
// level with probability proportional to C(n,w) 2^w restricted to the band,
// then a uniform point of that weight. Deterministic cost per draw, unlike
// rejection. Works for n far beyond enumerable sizes.
class MiddleSampler {
public:
    MiddleSampler(int n, double tau);

    const std::vector<int>& band_weights() const { return weights_; }

    TernaryPoint sample(Rng& rng) const;

private:
    int n_;
    std::vector<int> weights_;      // admissible weight levels
    std::vector<double> cum_;       // cumulative level probabilities
};

// Uniform point with exactly w nonzero coordinates.
TernaryPoint sample_fixed_weight(Rng& rng, int n, int w);

inline TernaryPoint sample_middle(Rng& rng, int n, double tau) {
    return MiddleSampler(n, tau).sample(rng);
}

}  // namespace ternary
