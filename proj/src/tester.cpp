#include "ternary/tester.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ternary/bigint.hpp"
#include "ternary/sampling.hpp"

namespace ternary {

TesterConfig make_tester_config(int n, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("make_tester_config: epsilon in (0,1) required");
    TesterConfig c;
    c.n = n;
    c.epsilon = epsilon;
    c.ell_raw = std::sqrt(2.0 * n * std::log(8.0 / epsilon));
    c.ell = std::ceil(2.0 * c.ell_raw) / 2.0;  // half-integer grid
    c.rounds = int(std::ceil(4.0 / epsilon));
    return c;
}

namespace {

PointIndex draw_point_index(Rng& rng, int n) {
    PointIndex idx = 0;
    std::uint64_t place = 1;
    for (int i = 0; i < n; ++i) {
        idx += place * rng.below(3);
        place *= 3;
    }
    return idx;
}

// Up(y) restricted to the middle band, ascending. The weight of a shadow
// point is weight(y) plus the number of freshly nonzero coordinates, which
// the odometer tracks incrementally.
std::vector<PointIndex> band_shadow(PointIndex y, const TesterConfig& config) {
    const int n = config.n;
    std::vector<int> zeros;
    {
        PointIndex t = y;
        for (int c = 0; c < n; ++c) {
            if (t % 3 == 0) zeros.push_back(c);
            t /= 3;
        }
    }
    const int base_weight = n - int(zeros.size());
    const std::size_t z = zeros.size();
    std::vector<unsigned> digit(z, 0);
    std::vector<std::uint64_t> place(z);
    for (std::size_t k = 0; k < z; ++k) place[k] = pow3(zeros[k]);

    std::vector<PointIndex> out;
    PointIndex cand = y;
    int extra = 0;
    if (in_middle(base_weight, n, config.ell)) out.push_back(y);
    for (;;) {
        std::size_t k = 0;
        while (k < z) {
            if (digit[k] == 0) {
                digit[k] = 1;
                cand += place[k];
                ++extra;
                break;
            }
            if (digit[k] == 1) {
                digit[k] = 2;
                cand += place[k];
                break;
            }
            digit[k] = 0;
            cand -= 2 * place[k];
            --extra;
            ++k;
        }
        if (k == z) break;
        if (in_middle(base_weight + extra, n, config.ell)) out.push_back(cand);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TesterQueryPlan tester_query_plan(const TesterConfig& config, std::uint64_t seed) {
    TesterQueryPlan plan;
    Rng rng(seed);
    plan.round_points.reserve(std::size_t(config.rounds));
    plan.round_batches.reserve(std::size_t(config.rounds));
    for (int r = 0; r < config.rounds; ++r) {
        const PointIndex y = draw_point_index(rng, config.n);
        plan.round_points.push_back(y);
        const int w = weight_of_index(y, config.n);
        if (in_middle(w, config.n, config.ell)) {
            plan.round_batches.push_back(band_shadow(y, config));
        } else {
            plan.round_batches.emplace_back();
        }
    }
    return plan;
}

TesterVerdict nonadaptive_onesided_test(MembershipOracle& oracle, const TesterConfig& config,
                                        std::uint64_t seed) {
    if (oracle.dim() != config.n)
        throw std::invalid_argument("nonadaptive_onesided_test: oracle dimension mismatch");
    TesterVerdict verdict;
    Rng rng(seed);
    const std::uint64_t start_queries = oracle.queries();

    for (int r = 0; r < config.rounds; ++r) {
        verdict.rounds_run = r + 1;
        const PointIndex y = draw_point_index(rng, config.n);
        const bool y_in = oracle.query(y);
        const int w = weight_of_index(y, config.n);
        if (y_in || !in_middle(w, config.n, config.ell)) continue;

        // batch is fixed by y; issue it (y itself is already answered)
        const std::vector<PointIndex> batch = band_shadow(y, config);
        std::vector<PointIndex> members;
        members.reserve(batch.size());
        for (PointIndex q : batch) {
            if (q == y) continue;
            if (oracle.query(q)) members.push_back(q);
        }
        if (members.empty()) continue;

        HullResult hull = in_hull_up_candidates(y, members, config.n);
        if (!hull.inside) continue;

        // prune the certificate support to a minimal witness, then verify it
        std::vector<PointIndex> support;
        for (const auto& [idx, lambda] : hull.certificate.support) support.push_back(idx);
        std::sort(support.begin(), support.end());
        std::size_t i = 0;
        while (i < support.size() && support.size() > 1) {
            std::vector<PointIndex> trial;
            trial.reserve(support.size() - 1);
            for (std::size_t j = 0; j < support.size(); ++j) {
                if (j != i) trial.push_back(support[j]);
            }
            if (in_hull_up_candidates(y, trial, config.n).inside) support = std::move(trial);
            else ++i;
        }
        ViolatingPair witness;
        witness.points = std::move(support);
        witness.y = y;
        witness.minimal = true;
        if (!in_hull_indices(y, witness.points, config.n).inside)
            throw std::logic_error("tester: witness failed exact re-verification");

        verdict.accept = false;
        verdict.witness = std::move(witness);
        break;
    }
    verdict.queries_used = oracle.queries() - start_queries;
    return verdict;
}

std::uint64_t tester_round_query_bound(int n, double ell) {
    const int k = std::min(n, int(2.0 * std::ceil(ell)));
    BigUint b = big_binomial(unsigned(n), unsigned(k));
    for (int i = 0; i < k; ++i) b.mul_small(3);
    return b.fits_u64() ? b.to_u64() : ~std::uint64_t(0);
}

double sample_witness_probability_bound(int n, int s) {
    if (s < 1) throw std::invalid_argument("sample_witness_probability_bound: s >= 1");
    return double(s) * double(s) * std::pow(5.0 / 9.0, n);
}

double sample_witness_probability_mc(int n, int s, std::uint64_t trials, Rng& rng) {
    if (s < 2) return 0.0;  // a single sample cannot form a pair
    std::uint64_t hits = 0;
    std::vector<PointIndex> pts(static_cast<std::size_t>(s));
    for (std::uint64_t t = 0; t < trials; ++t) {
        for (auto& p : pts) p = draw_point_index(rng, n);
        bool found = false;
        for (int a = 0; a < s && !found; ++a) {
            for (int b = 0; b < s; ++b) {
                if (a == b) continue;
                if (poset_leq_idx(pts[std::size_t(b)], pts[std::size_t(a)], n)) {
                    found = true;
                    break;
                }
            }
        }
        hits += found;
    }
    return double(hits) / double(trials);
}

}  // namespace ternary
