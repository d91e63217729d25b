#include "ternary/learner.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "ternary/convex.hpp"
#include "ternary/fourier.hpp"
#include "ternary/sampling.hpp"

namespace ternary {

namespace {

// support of a frequency as (coordinate, trit) pairs, for fast products
struct AlphaSupport {
    std::vector<std::pair<int, int>> entries;
};

AlphaSupport support_of(PointIndex alpha, int n) {
    AlphaSupport s;
    PointIndex t = alpha;
    for (int c = 0; c < n; ++c) {
        const int trit = trit_from_digit(unsigned(t % 3));
        if (trit != 0) s.entries.emplace_back(c, trit);
        t /= 3;
    }
    return s;
}

double support_eval(const AlphaSupport& s, const TernaryPoint& x) {
    double v = 1.0;
    for (const auto& [coord, trit] : s.entries) v *= basis_eval_1d(trit, x.coords[coord]);
    return v;
}

}  // namespace

double LowDegreeHypothesis::evaluate_raw(const TernaryPoint& x) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < alphas.size(); ++i)
        acc += coeffs[i] * basis_eval_idx(alphas[i], encode(x), n);
    return acc;
}

PointSet LowDegreeHypothesis::positive_set() const {
    PointSet s(n);
    for (PointIndex i = 0; i < s.domain(); ++i) {
        double acc = 0.0;
        for (std::size_t a = 0; a < alphas.size(); ++a)
            acc += coeffs[a] * basis_eval_idx(alphas[a], i, n);
        if (acc >= 0.0) s.set(i);
    }
    return s;
}

std::vector<PointIndex> low_degree_alphas(int n, int degree_cap) {
    std::vector<PointIndex> out;
    for (PointIndex a = 0; a < domain_size(n); ++a) {
        if (weight_of_index(a, n) <= degree_cap) out.push_back(a);
    }
    return out;
}

std::uint64_t low_degree_basis_size(int n, int degree_cap) {
    // sum_{d<=cap} C(n,d) 2^d
    std::uint64_t total = 0;
    std::uint64_t binom = 1, p2 = 1;
    for (int d = 0; d <= degree_cap && d <= n; ++d) {
        total += binom * p2;
        binom = binom * std::uint64_t(n - d) / std::uint64_t(d + 1);
        p2 *= 2;
    }
    return total;
}

std::uint64_t low_degree_sample_size(int n, int degree_cap, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("low_degree_sample_size: epsilon in (0,1)");
    const double a = double(low_degree_basis_size(n, degree_cap));
    return std::uint64_t(std::ceil(3.0 * a * a / epsilon));
}

ExampleStream uniform_examples_from_set(const PointSet& target, Rng& rng) {
    const int n = target.dim();
    auto shared = std::make_shared<Rng>(rng.child(0x5a11));
    return [target, n, shared]() -> std::optional<std::pair<TernaryPoint, int>> {
        TernaryPoint x = sample_uniform(*shared, n);
        const int label = target.contains(x) ? 1 : -1;
        return std::make_pair(std::move(x), label);
    };
}

ExampleStream uniform_examples_from_fn(int n, std::function<bool(const TernaryPoint&)> member,
                                       Rng& rng) {
    auto shared = std::make_shared<Rng>(rng.child(0x5a12));
    return [n, member = std::move(member), shared]() -> std::optional<std::pair<TernaryPoint, int>> {
        TernaryPoint x = sample_uniform(*shared, n);
        const int label = member(x) ? 1 : -1;
        return std::make_pair(std::move(x), label);
    };
}

LowDegreeHypothesis low_degree_learn(const ExampleStream& examples, int n, double epsilon,
                                     int degree_cap) {
    if (degree_cap < 0 || degree_cap > n)
        throw std::invalid_argument("low_degree_learn: degree cap out of range");
    LowDegreeHypothesis h;
    h.n = n;
    h.degree_cap = degree_cap;
    h.alphas = low_degree_alphas(n, degree_cap);
    h.coeffs.assign(h.alphas.size(), 0.0);

    std::vector<AlphaSupport> supports;
    supports.reserve(h.alphas.size());
    for (PointIndex a : h.alphas) supports.push_back(support_of(a, n));

    const std::uint64_t s = low_degree_sample_size(n, degree_cap, epsilon);
    for (std::uint64_t i = 0; i < s; ++i) {
        auto ex = examples();
        if (!ex) throw std::runtime_error("low_degree_learn: example stream exhausted");
        const auto& [x, label] = *ex;
        for (std::size_t a = 0; a < supports.size(); ++a)
            h.coeffs[a] += label * support_eval(supports[a], x);
    }
    for (auto& c : h.coeffs) c /= double(s);
    return h;
}

Rational hypothesis_error_exact(const LowDegreeHypothesis& h, const PointSet& target) {
    if (h.n != target.dim())
        throw std::invalid_argument("hypothesis_error_exact: dimension mismatch");
    std::uint64_t wrong = 0;
    for (PointIndex i = 0; i < target.domain(); ++i) {
        double acc = 0.0;
        for (std::size_t a = 0; a < h.alphas.size(); ++a)
            acc += h.coeffs[a] * basis_eval_idx(h.alphas[a], i, h.n);
        const bool predicted = acc >= 0.0;
        wrong += (predicted != target.test(i));
    }
    return Rational(std::int64_t(wrong), std::int64_t(target.domain()));
}

LearningTestVerdict test_by_learning(const ExampleStream& examples, int n, double epsilon,
                                     int degree_cap) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("test_by_learning: epsilon in (0,1)");
    LearningTestVerdict verdict;

    const double learn_eps = epsilon / 4.0;
    LowDegreeHypothesis h = low_degree_learn(examples, n, learn_eps, degree_cap);
    verdict.samples_used = low_degree_sample_size(n, degree_cap, learn_eps);

    // nearest convex set to the hypothesis
    const PointSet hpos = h.positive_set();
    PointSet projected(n);
    if (n <= 2) {
        verdict.exact_projection = true;
        std::uint64_t best = ~std::uint64_t(0);
        for (const PointSet& c : all_convex_sets(n)) {
            const std::uint64_t d = hpos.symmetric_difference_size(c);
            if (d < best) {
                best = d;
                projected = c;
            }
        }
    } else {
        projected = hull_closure(hpos);
    }

    const std::uint64_t fresh = std::uint64_t(std::ceil(32.0 / epsilon));
    std::uint64_t disagreements = 0;
    for (std::uint64_t i = 0; i < fresh; ++i) {
        auto ex = examples();
        if (!ex) throw std::runtime_error("test_by_learning: example stream exhausted");
        const auto& [x, label] = *ex;
        const bool target_in = label > 0;
        if (target_in != projected.contains(x)) ++disagreements;
    }
    verdict.samples_used += fresh;
    verdict.estimated_distance = double(disagreements) / double(fresh);
    verdict.accept = verdict.estimated_distance <= epsilon / 2.0;
    return verdict;
}

}  // namespace ternary
