#include "ternary/cube_walk.hpp"

#include <cmath>
#include <stdexcept>

#include "ternary/bigint.hpp"

namespace ternary {

CubeWalkParams CubeWalkParams::standard(int n) {
    if (n < 3) throw std::invalid_argument("CubeWalkParams: n >= 3 required");
    CubeWalkParams p;
    p.n = n;
    const double ln_n = std::log(double(n));
    p.ell = std::max(1.0, std::round(std::sqrt(2.0 * n * ln_n)));
    p.m = std::max(1, int(std::round(std::sqrt(double(n) / ln_n))));
    return p;
}

CubeWalkRealization cube_walk_sample(const CubeWalkParams& params, const MembershipFn& member,
                                     Rng& rng, const MiddleSampler& sampler) {
    CubeWalkRealization real;
    std::vector<int> zeros;
    for (;;) {
        real.start = sampler.sample(rng);
        zeros.clear();
        for (int i = 0; i < params.n; ++i) {
            if (real.start.coords[i] == 0) zeros.push_back(i);
        }
        if (int(zeros.size()) >= params.m) break;
        ++real.rejections;
        if (real.rejections > 1'000'000)
            throw std::runtime_error("cube_walk_sample: cannot find a start with enough zeros");
    }

    const int m = params.m;
    real.flip_coords.resize(std::size_t(m));
    for (int i = 0; i < m; ++i) {
        const int j = i + int(rng.below(zeros.size() - std::size_t(i)));
        std::swap(zeros[std::size_t(i)], zeros[std::size_t(j)]);
        real.flip_coords[std::size_t(i)] = zeros[std::size_t(i)];
    }
    real.flip_signs.resize(std::size_t(m));
    for (auto& s : real.flip_signs) s = rng.sign();

    real.path.clear();
    real.path.reserve(std::size_t(m) + 1);
    real.path.push_back(real.start);
    for (int s = 0; s < m; ++s) {
        TernaryPoint next = real.path.back();
        next.coords[std::size_t(real.flip_coords[std::size_t(s)])] = real.flip_signs[std::size_t(s)];
        real.path.push_back(std::move(next));
    }

    real.chosen_step = 1 + int(rng.below(std::uint64_t(m)));
    real.crossed = member(real.path[std::size_t(real.chosen_step) - 1]) !=
                   member(real.path[std::size_t(real.chosen_step)]);
    return real;
}

bool SmoothHalfspaces::contains(const TernaryPoint& x) const {
    for (std::size_t i = 0; i < normals.size(); ++i) {
        if (margin(x, i) >= 0.0) return false;
    }
    return true;
}

double SmoothHalfspaces::margin(const TernaryPoint& x, std::size_t i) const {
    double dot = 0.0;
    for (int c = 0; c < n; ++c) dot += normals[i][std::size_t(c)] * x.coords[std::size_t(c)];
    return dot - taus[i];
}

SmoothHalfspaces make_smooth_halfspaces(int n, int k, double tau, Rng& rng) {
    SmoothHalfspaces hs;
    hs.n = n;
    hs.normals.assign(std::size_t(k), std::vector<double>(std::size_t(n)));
    hs.taus.assign(std::size_t(k), tau);
    const double delta = 1.0 / (3.0 * n);
    for (auto& v : hs.normals) {
        for (auto& c : v) c = rng.sign() + rng.uniform(-delta, delta);
    }
    return hs;
}

WalkReduction halfspace_walk_reduction(const SmoothHalfspaces& hs,
                                       const CubeWalkRealization& real) {
    const int m = int(real.flip_coords.size());
    const std::size_t k = hs.normals.size();
    WalkReduction red;
    red.starts.resize(k);

    std::vector<int> identity(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) identity[std::size_t(i)] = i;

    std::vector<WalkTrace> traces;
    traces.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        red.starts[i] = hs.margin(real.start, i);
        StepVector steps;
        steps.steps.resize(std::size_t(m));
        for (int j = 0; j < m; ++j)
            steps.steps[std::size_t(j)] = hs.normals[i][std::size_t(real.flip_coords[std::size_t(j)])];
        steps.dss_certified = true;  // perturbed normals; audited below
        traces.push_back(walk_eval(steps, red.starts[i], identity, real.flip_signs));
    }
    red.max_trace = max_of_traces(traces);

    for (int s = 0; s <= m; ++s) {
        const bool inside = hs.contains(real.path[std::size_t(s)]);
        const bool walk_inside = red.max_trace.w[std::size_t(s)] < 0.0;
        if (inside != walk_inside) red.membership_equivalence = false;
    }
    for (int s = 1; s <= m; ++s) {
        const bool crossed = hs.contains(real.path[std::size_t(s) - 1]) !=
                             hs.contains(real.path[std::size_t(s)]);
        const bool flipped = (red.max_trace.w[std::size_t(s)] >= 0.0) !=
                             (red.max_trace.w[std::size_t(s) - 1] >= 0.0);
        if (crossed != flipped) red.crossing_equivalence = false;
    }
    return red;
}

double cube_walk_point_probability(const CubeWalkParams& params, int w, int s) {
    const int n = params.n;
    if (s < 1 || s > params.m) throw std::invalid_argument("cube_walk_point_probability: bad s");
    const int w0 = w - s;  // start weight
    if (w0 < 0 || w0 > n) return 0.0;
    if (!in_middle(w0, n, params.ell)) return 0.0;
    if (n - w0 < params.m) return 0.0;  // start must have m zeros

    // admissible start mass
    long double ln_mass = 0.0L;
    {
        BigUint mass(0);
        for (int w1 = 0; w1 <= n; ++w1) {
            if (!in_middle(w1, n, params.ell) || n - w1 < params.m) continue;
            BigUint level = big_binomial(unsigned(n), unsigned(w1));
            level.shift_left_bits(unsigned(w1));
            mass += level;
        }
        if (mass.is_zero()) return 0.0;
        ln_mass = mass.ln();
    }

    // uniform over admissible starts, times 2^-s, times the level-size ratio
    const long double ln2 = 0.6931471805599453094L;
    const long double ln_p = -ln_mass - s * ln2 +
                             big_binomial(unsigned(n), unsigned(w0)).ln() -
                             big_binomial(unsigned(n), unsigned(w)).ln();
    return double(expl(ln_p));
}

}  // namespace ternary
