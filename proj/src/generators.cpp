#include "ternary/generators.hpp"

#include <cmath>
#include <stdexcept>

#include "ternary/sampling.hpp"

namespace ternary {

bool Halfspace::contains(const TernaryPoint& x) const {
    if (x.dim() != int(normal.size()))
        throw std::invalid_argument("Halfspace: dimension mismatch");
    double dot = 0.0;
    for (int i = 0; i < x.dim(); ++i) dot += normal[i] * x.coords[i];
    return dot < tau;
}

PointSet make_halfspace_set(const std::vector<double>& normal, double tau, int n) {
    Halfspace h{normal, tau};
    return PointSet::from_predicate(
        n, [&](PointIndex i) { return h.contains(decode(i, n)); });
}

PointSet make_ball(double r, int n) {
    return PointSet::from_predicate(
        n, [&](PointIndex i) { return double(weight_of_index(i, n)) < r; });
}

namespace {

std::int64_t ternary_dot(const TernaryPoint& v, PointIndex x, int n) {
    std::int64_t dot = 0;
    PointIndex t = x;
    for (int i = 0; i < n; ++i) {
        const int xi = trit_from_digit(unsigned(t % 3));
        t /= 3;
        if (xi != 0) dot += std::int64_t(xi) * v.coords[i];
    }
    return dot;
}

}  // namespace

PointSet make_slab(const SlabSpec& spec, int n) {
    if (spec.v.dim() != n) throw std::invalid_argument("make_slab: dimension mismatch");
    return PointSet::from_predicate(n, [&](PointIndex i) {
        const double dot = double(ternary_dot(spec.v, i, n));
        return std::abs(dot) <= spec.tau;
    });
}

PointSet make_antislab(const SlabSpec& spec, int n) { return make_slab(spec, n).complement(); }

TasSpec TasSpec::canonical(int n, Rng& rng) {
    TasSpec spec;
    spec.v = sample_fixed_weight(rng, n, n / 2);
    spec.tau = std::sqrt(double(n));
    spec.t = 0.7 * std::sqrt(double(n));
    return spec;
}

PointSet make_tas(const TasSpec& spec, int n) {
    if (spec.v.dim() != n) throw std::invalid_argument("make_tas: dimension mismatch");
    return PointSet::from_predicate(n, [&](PointIndex i) {
        const int w = weight_of_index(i, n);
        const LayerTag layer = layer_classify(w, n, spec.t);
        if (layer == LayerTag::Outer) return false;
        if (layer == LayerTag::Inner) return true;
        const double dot = double(ternary_dot(spec.v, i, n));
        return std::abs(dot) > spec.tau;
    });
}

Dyadic sign_sum_tail(int m, double tau) {
    // sum of m fair signs is 2j - m over j successes
    BigUint num(0);
    for (int j = 0; j <= m; ++j) {
        if (double(2 * j - m) > tau) num += big_binomial(unsigned(m), unsigned(j));
    }
    return Dyadic(num, unsigned(m));
}

DensityProfile density_profile(int n, double tau) {
    DensityProfile prof;
    const double mean = 2.0 * n / 3.0;
    const double band = std::sqrt(double(n));
    for (int w = 0; w <= n; ++w) {
        if (std::abs(double(w) - mean) > band) continue;
        const Dyadic tail = sign_sum_tail(w, tau);
        DensityRow row;
        row.weight = w;
        row.ell = double(w) - mean;
        row.rho = tail.to_double();
        row.log2_rho = tail.num.is_zero()
                           ? -std::numeric_limits<double>::infinity()
                           : double(tail.num.log2() - (long double)tail.shift);
        prof.rows.push_back(row);
    }
    if (prof.rows.empty()) throw std::domain_error("density_profile: empty band");
    prof.max_rho = 0.0;
    prof.min_rho = std::numeric_limits<double>::infinity();
    for (const auto& row : prof.rows) {
        prof.max_rho = std::max(prof.max_rho, row.rho);
        if (row.rho > 0.0) prof.min_rho = std::min(prof.min_rho, row.rho);
    }
    prof.max_min_ratio = (std::isfinite(prof.min_rho) && prof.min_rho > 0.0)
                             ? prof.max_rho / prof.min_rho
                             : std::numeric_limits<double>::infinity();
    return prof;
}

bool RhiInstance::contains(const TernaryPoint& x) const {
    for (const auto& v : normals) {
        std::int64_t dot = 0;
        for (int i = 0; i < n; ++i) dot += std::int64_t(v[i]) * x.coords[i];
        if (dot > tau) return false;
    }
    return true;
}

RhiInstance make_random_halfspace_intersection(int n, Rng& rng,
                                               const RhiOverrides& overrides,
                                               bool materialize) {
    RhiInstance inst;
    inst.n = n;

    const int m0 = (2 * n) / 3;
    const long double ln2 = 0.6931471805599453094L;
    const long double ln_eps = -std::sqrt((long double)n) * ln2;  // eps = 2^-sqrt(n)

    if (overrides.tau) {
        inst.tau = *overrides.tau;
    } else {
        // largest integer threshold whose exact tail still carries mass eps
        int best = 0;
        for (int t = 0; t <= m0; ++t) {
            const Dyadic tail = sign_sum_tail(m0, double(t));
            if (tail.num.is_zero()) break;
            const long double ln_tail = tail.num.ln() - (long double)tail.shift * ln2;
            if (ln_tail >= ln_eps) best = t;
            else break;
        }
        inst.tau = best;
    }
    inst.rho = sign_sum_tail(m0, double(inst.tau)).to_double();

    if (overrides.k) {
        inst.k = std::max(1, *overrides.k);
    } else {
        const double raw = 1.0 / (4.0 * overrides.c1 * inst.rho);
        inst.k = std::max(1, int(std::floor(raw)));
    }

    inst.normals.assign(inst.k, std::vector<int>(n));
    for (auto& v : inst.normals) {
        for (int i = 0; i < n; ++i) v[i] = rng.sign();
    }

    if (materialize) {
        if (n > 16) throw std::domain_error("make_random_halfspace_intersection: n too large to materialize");
        inst.set = PointSet::from_predicate(n, [&](PointIndex idx) {
            PointIndex t = idx;
            std::vector<int> x(n);
            for (int i = 0; i < n; ++i) {
                x[i] = trit_from_digit(unsigned(t % 3));
                t /= 3;
            }
            for (const auto& v : inst.normals) {
                std::int64_t dot = 0;
                for (int i = 0; i < n; ++i) dot += std::int64_t(v[i]) * x[i];
                if (dot > inst.tau) return false;
            }
            return true;
        });
    }
    return inst;
}

}  // namespace ternary
