#include "ternary/walks.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ternary {

StepVector dss_perturb(int m, Rng& rng) {
    if (m < 1) throw std::invalid_argument("dss_perturb: m >= 1 required");
    StepVector x;
    x.steps.resize(std::size_t(m));
    const double delta = 1.0 / (3.0 * m);
    for (auto& s : x.steps) s = 1.0 + rng.uniform(-delta, delta);
    // continuous perturbations are distinct-subset-sum with probability 1;
    // exhaustive certification is a separate call because it costs 3^m
    x.dss_certified = true;
    return x;
}

bool dss_check_exhaustive(const std::vector<double>& steps) {
    const int m = int(steps.size());
    if (m > 18) throw std::domain_error("dss_check_exhaustive: 3^m blows past m=18");
    // disjoint subset sums all differ <=> no {-1,0,1} combination sums to zero
    bool ok = true;
    std::vector<int> c(std::size_t(m), 0);
    double sum = 0.0;
    for (;;) {
        int k = 0;
        while (k < m) {
            if (c[k] == 0) {
                c[k] = 1;
                sum += steps[k];
                break;
            }
            if (c[k] == 1) {
                c[k] = -1;
                sum -= 2 * steps[k];
                break;
            }
            c[k] = 0;
            sum += steps[k];
            ++k;
        }
        if (k == m) break;
        if (sum == 0.0) {
            ok = false;
            break;
        }
    }
    return ok;
}

WalkTrace walk_eval(const StepVector& x, double a, const std::vector<int>& perm,
                    const std::vector<int>& signs) {
    const std::size_t m = x.steps.size();
    if (perm.size() != m || signs.size() != m)
        throw std::invalid_argument("walk_eval: length mismatch");
    WalkTrace t;
    t.w.resize(m + 1);
    t.w[0] = a;
    for (std::size_t i = 0; i < m; ++i)
        t.w[i + 1] = t.w[i] + signs[i] * x.steps[std::size_t(perm[i])];
    return t;
}

WalkTrace max_walk(const std::vector<StepVector>& xs, const std::vector<double>& starts,
                   const std::vector<int>& perm, const std::vector<int>& signs) {
    if (xs.empty()) throw std::invalid_argument("max_walk: no constituents");
    if (starts.size() != xs.size())
        throw std::invalid_argument("max_walk: starts/constituents mismatch");
    std::vector<WalkTrace> traces;
    traces.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        traces.push_back(walk_eval(xs[i], starts[i], perm, signs));
    return max_of_traces(traces);
}

WalkTrace max_of_traces(const std::vector<WalkTrace>& traces) {
    WalkTrace m = traces.front();
    for (std::size_t i = 1; i < traces.size(); ++i) {
        if (traces[i].w.size() != m.w.size())
            throw std::invalid_argument("max_of_traces: length mismatch");
        for (std::size_t t = 0; t < m.w.size(); ++t)
            m.w[t] = std::max(m.w[t], traces[i].w[t]);
    }
    return m;
}

CrossingStats crossing_stats(const WalkTrace& trace) {
    const auto& w = trace.w;
    const int m = trace.length();
    CrossingStats st;

    // crossings
    for (int t = 1; t <= m; ++t) {
        const bool prev_nonneg = w[t - 1] >= 0.0;
        const bool cur_nonneg = w[t] >= 0.0;
        if (prev_nonneg && !cur_nonneg) ++st.c_down;
        if (!prev_nonneg && cur_nonneg) ++st.c_up;
        if (prev_nonneg != cur_nonneg) ++st.c;
    }

    // level returns: a nonnegative reference arms at the start (if W(0) >= 0)
    // and at every upcrossing; it fires once, the first time the walk drops
    // strictly below it. An armed reference always fires before the next
    // upcrossing, so a single slot suffices.
    {
        bool armed = w[0] >= 0.0;
        double ref = w[0];
        for (int t = 1; t <= m; ++t) {
            if (armed && w[t] < ref) {
                ++st.l_down;
                armed = false;
            }
            if (w[t] >= 0.0 && w[t - 1] < 0.0) {  // upcrossing re-arms
                armed = true;
                ref = w[t];
            }
        }
    }

    // level decreases: chase a falling reference; while the reference is
    // negative the chain waits for the next upcrossing and adopts its value.
    {
        bool armed = w[0] >= 0.0;
        double ref = w[0];
        for (int t = 1; t <= m; ++t) {
            if (armed) {
                if (w[t] < ref) {
                    ++st.s_down;
                    if (w[t] >= 0.0) {
                        ref = w[t];
                    } else {
                        armed = false;  // wait for an upcrossing
                    }
                }
            } else if (w[t] >= 0.0 && w[t - 1] < 0.0) {
                armed = true;
                ref = w[t];
            }
        }
    }

    // level increases: mirror image.
    {
        bool armed = w[0] < 0.0;
        double ref = w[0];
        for (int t = 1; t <= m; ++t) {
            if (armed) {
                if (w[t] > ref) {
                    ++st.s_up;
                    if (w[t] < 0.0) {
                        ref = w[t];
                    } else {
                        armed = false;  // wait for a downcrossing
                    }
                }
            } else if (w[t] < 0.0 && w[t - 1] >= 0.0) {
                armed = true;
                ref = w[t];
            }
        }
    }

    for (int t = 1; t <= m; ++t) {
        if (w[t] == 0.0 || w[t] == 1.0 || w[t] == -1.0) ++st.z;
    }
    return st;
}

Rational sparre_andersen_g_exact(int m) {
    if (m < 0) throw std::invalid_argument("sparre_andersen_g_exact: m >= 0");
    if (m > 31) throw std::domain_error("sparre_andersen_g_exact: exceeds 64-bit range");
    const BigUint num = big_binomial(unsigned(2 * m), unsigned(m));
    const std::int64_t den = std::int64_t(1) << (2 * m);
    return Rational(std::int64_t(num.to_u64()), den);
}

double sparre_andersen_g(int m) {
    double g = 1.0;
    for (int i = 1; i <= m; ++i) g *= double(2 * i - 1) / double(2 * i);
    return g;
}

std::vector<double> sparre_andersen_g_table(int m) {
    std::vector<double> g(std::size_t(m) + 1);
    g[0] = 1.0;
    for (int i = 1; i <= m; ++i) g[std::size_t(i)] = g[std::size_t(i) - 1] * double(2 * i - 1) / double(2 * i);
    return g;
}

double all_positive_probability(const StepVector& x, std::uint64_t trials, Rng& rng) {
    if (!x.dss_certified)
        throw std::invalid_argument("all_positive_probability: step vector not DSS-certified");
    const int m = x.length();
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::uint64_t hits = 0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = m - 1; i > 0; --i)
            std::swap(perm[std::size_t(i)], perm[rng.below(std::uint64_t(i) + 1)]);
        double w = 0.0;
        bool positive = true;
        for (int i = 0; i < m && positive; ++i) {
            w += (rng.coin() ? 1.0 : -1.0) * x.steps[std::size_t(perm[std::size_t(i)])];
            if (w == 0.0)
                throw std::logic_error("all_positive_probability: exact zero on a DSS walk");
            positive = w > 0.0;
        }
        hits += positive;
    }
    return double(hits) / double(trials);
}

int sample_interrecord_capped(Rng& rng, int cap, const std::vector<double>& g_table) {
    if (int(g_table.size()) < cap + 1)
        throw std::invalid_argument("sample_interrecord_capped: table too short");
    const double u = rng.uniform01();
    // R = min{ t >= 1 : g(t) <= u }; the tail is monotone so binary search
    if (g_table[std::size_t(cap)] > u) return cap + 1;
    int lo = 1, hi = cap;
    while (lo < hi) {
        const int mid = (lo + hi) / 2;
        if (g_table[std::size_t(mid)] <= u) hi = mid;
        else lo = mid + 1;
    }
    return lo;
}

int sample_renewal_count(int m, Rng& rng, const std::vector<double>& g_table) {
    int q = 0, x = 0;
    while (x < m) {
        const int r = sample_interrecord_capped(rng, m - x, g_table);
        if (r > m - x) break;  // record lands past the horizon
        ++q;
        x += r;
    }
    return q;
}

std::vector<double> expected_renewal_counts(int m) {
    // exact dyadic DP; P[R=t] = g(t-1) - g(t) with g(t) = C(2t,t)/4^t
    std::vector<Dyadic> g(std::size_t(m) + 1);
    for (int t = 0; t <= m; ++t)
        g[std::size_t(t)] = Dyadic(big_binomial(unsigned(2 * t), unsigned(t)), unsigned(2 * t));
    std::vector<Dyadic> q(std::size_t(m) + 1);
    q[0] = Dyadic(BigUint(0), 0);
    for (int j = 1; j <= m; ++j) {
        Dyadic acc(BigUint(0), 0);
        for (int t = 1; t <= j; ++t) {
            const Dyadic pr = Dyadic::sub(g[std::size_t(t) - 1], g[std::size_t(t)]);
            const Dyadic one_plus = Dyadic::add(Dyadic::from_u64(1), q[std::size_t(j - t)]);
            acc = Dyadic::add(acc, Dyadic::mul(pr, one_plus));
        }
        q[std::size_t(j)] = acc;
    }
    std::vector<double> out(std::size_t(m) + 1);
    for (int j = 0; j <= m; ++j) out[std::size_t(j)] = q[std::size_t(j)].to_double();
    return out;
}

}  // namespace ternary
