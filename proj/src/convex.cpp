#include "ternary/convex.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include "ternary/parallel.hpp"
#include "ternary/simplex.hpp"

namespace ternary {

namespace {

// Columns of the feasibility system for deciding y in Conv(X) against
// candidates restricted to the upper shadow of y: one row per zero coordinate
// of y plus the weight-sum row. Rows for nonzero coordinates of y are
// redundant there because every candidate matches y on them exactly.
struct UpSystem {
    std::vector<PointIndex> candidates;
    std::vector<std::vector<Rational>> rows;  // (zeros+1) x |candidates|
};

std::vector<int> zero_coords(PointIndex y, int n) {
    std::vector<int> zeros;
    zeros.reserve(n);
    PointIndex t = y;
    for (int c = 0; c < n; ++c) {
        if (t % 3 == 0) zeros.push_back(c);
        t /= 3;
    }
    return zeros;
}

// Enumerates Up(y) by an odometer over the zero coordinates of y and keeps
// the members of `base`, emitting their restricted trits as LP columns.
UpSystem build_up_system(PointIndex y, const std::vector<int>& zeros, const PointSet& base) {
    const std::size_t z = zeros.size();
    UpSystem sys;
    sys.rows.assign(z + 1, {});
    std::vector<unsigned> digit(z, 0);
    std::vector<std::uint64_t> place(z);
    for (std::size_t k = 0; k < z; ++k) place[k] = pow3(zeros[k]);

    PointIndex cand = y;
    for (;;) {
        // advance the odometer; the all-zero assignment is y itself and is
        // skipped up front since y is never in `base` when this is called
        std::size_t k = 0;
        while (k < z) {
            if (digit[k] == 0) {
                digit[k] = 1;
                cand += place[k];
                break;
            }
            if (digit[k] == 1) {
                digit[k] = 2;
                cand += place[k];
                break;
            }
            digit[k] = 0;
            cand -= 2 * place[k];
            ++k;
        }
        if (k == z) break;

        if (!base.test(cand)) continue;
        sys.candidates.push_back(cand);
        for (std::size_t r = 0; r < z; ++r)
            sys.rows[r].push_back(Rational(trit_from_digit(digit[r])));
        sys.rows[z].push_back(Rational(1));
    }
    return sys;
}

// Necessary condition: on every free coordinate the candidate trits must not
// be strictly one-signed, or no nonnegative combination can sum to zero.
bool passes_sign_prefilter(const UpSystem& sys) {
    const std::size_t z = sys.rows.size() - 1;
    for (std::size_t r = 0; r < z; ++r) {
        bool has_nonpos = false, has_nonneg = false;
        for (const Rational& v : sys.rows[r]) {
            if (!v.is_positive()) has_nonpos = true;
            if (!v.is_negative()) has_nonneg = true;
            if (has_nonpos && has_nonneg) break;
        }
        if (!has_nonpos || !has_nonneg) return false;
    }
    return true;
}

// Integer view of the candidate columns for the fast paths: trits per row
// plus the implicit sum row of ones.
struct IntSystem {
    std::size_t rows = 0;  // zeros + 1
    std::size_t cols = 0;
    std::vector<std::int8_t> trits;  // row-major, rows x cols, the sum row omitted
};

IntSystem int_view(const UpSystem& sys) {
    IntSystem v;
    v.rows = sys.rows.size();
    v.cols = sys.candidates.size();
    v.trits.resize((v.rows - 1) * v.cols);
    for (std::size_t r = 0; r + 1 < v.rows; ++r) {
        for (std::size_t j = 0; j < v.cols; ++j)
            v.trits[r * v.cols + j] = std::int8_t(sys.rows[r][j].num());
    }
    return v;
}

// Floating-point phase-1 simplex used only as an oracle; every verdict it
// suggests is re-established exactly before being trusted. Returns the basis
// on success and the dual multipliers otherwise.
struct FloatLpOutcome {
    bool looks_feasible = false;
    bool trustworthy = false;  // iteration cap not hit
    std::vector<std::size_t> basis;
    std::vector<double> dual;
};

FloatLpOutcome float_phase1(const IntSystem& sys) {
    const std::size_t m = sys.rows;
    const std::size_t k = sys.cols;
    FloatLpOutcome out;
    // tableau over decision columns + artificial identity; rhs = e_m
    std::vector<double> t(m * k);
    for (std::size_t r = 0; r + 1 < m; ++r) {
        for (std::size_t j = 0; j < k; ++j) t[r * k + j] = double(sys.trits[r * k + j]);
    }
    for (std::size_t j = 0; j < k; ++j) t[(m - 1) * k + j] = 1.0;
    std::vector<double> rhs(m, 0.0);
    rhs[m - 1] = 1.0;
    std::vector<double> art(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i) art[i * m + i] = 1.0;
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = k + i;

    std::vector<double> obj(k);
    for (std::size_t j = 0; j < k; ++j) {
        double s = 0.0;
        for (std::size_t r = 0; r < m; ++r) s += t[r * k + j];
        obj[j] = -s;
    }
    std::vector<double> obj_art(m, 0.0);
    double obj_val = -1.0;  // -sum rhs

    const int max_iters = 400;
    for (int iter = 0; iter < max_iters; ++iter) {
        // Dantzig entering over decision then artificial columns
        std::size_t enter = k + m;
        double best = -1e-9;
        for (std::size_t j = 0; j < k; ++j) {
            if (obj[j] < best) {
                best = obj[j];
                enter = j;
            }
        }
        for (std::size_t j = 0; j < m; ++j) {
            if (obj_art[j] < best) {
                best = obj_art[j];
                enter = k + j;
            }
        }
        if (enter == k + m) {
            out.trustworthy = true;
            break;
        }
        const auto col_at = [&](std::size_t row) {
            return enter < k ? t[row * k + enter] : art[row * m + (enter - k)];
        };
        std::size_t leave = m;
        double best_ratio = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double a = col_at(i);
            if (a <= 1e-11) continue;
            const double ratio = rhs[i] / a;
            if (leave == m || ratio < best_ratio) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m) break;  // numerically unbounded; bail to exact
        const double piv = col_at(leave);
        for (std::size_t j = 0; j < k; ++j) t[leave * k + j] /= piv;
        for (std::size_t j = 0; j < m; ++j) art[leave * m + j] /= piv;
        rhs[leave] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave) continue;
            const double f = col_at(i);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < k; ++j) t[i * k + j] -= f * t[leave * k + j];
            for (std::size_t j = 0; j < m; ++j) art[i * m + j] -= f * art[leave * m + j];
            rhs[i] -= f * rhs[leave];
        }
        {
            const double f = enter < k ? obj[enter] : obj_art[enter - k];
            if (f != 0.0) {
                for (std::size_t j = 0; j < k; ++j) obj[j] -= f * t[leave * k + j];
                for (std::size_t j = 0; j < m; ++j) obj_art[j] -= f * art[leave * m + j];
                obj_val -= f * rhs[leave];
            }
        }
        basis[leave] = enter;
    }
    out.looks_feasible = out.trustworthy && obj_val > -1e-7;
    out.basis = basis;
    // dual of the phase-1 problem lives in the artificial columns' reduced
    // costs: u_r = -(obj_art[r] - 1) after pricing; reconstruct directly
    out.dual.assign(m, 0.0);
    for (std::size_t r = 0; r < m; ++r) out.dual[r] = 1.0 - obj_art[r];
    return out;
}

// Exact Farkas check. Since every column carries a trailing 1 (the sum row)
// and the rhs is the last unit vector, a certificate exists iff some
// functional over the trit rows puts every candidate strictly below zero;
// the sum-row multiplier is then synthesized, not rounded. Verification is
// pure integer arithmetic over the rounded trit-row multipliers.
bool farkas_proves_infeasible(const IntSystem& sys, const std::vector<double>& dual) {
    const std::size_t m = sys.rows;
    constexpr double kScale = 1 << 20;
    std::vector<std::int64_t> u(m - 1);
    for (std::size_t r = 0; r + 1 < m; ++r) {
        const double scaled = dual[r] * kScale;
        if (!(std::abs(scaled) < 9e15)) return false;
        u[r] = std::int64_t(std::llround(scaled));
    }
    for (std::size_t j = 0; j < sys.cols; ++j) {
        __int128 dot = 0;
        const std::int8_t* col = sys.trits.data() + j;
        for (std::size_t r = 0; r + 1 < m; ++r) {
            const int trit = col[r * sys.cols];
            if (trit == 1) dot += u[r];
            else if (trit == -1) dot -= u[r];
        }
        if (dot >= 0) return false;
    }
    return true;
}

HullResult exact_solve_up_system(const UpSystem& sys) {
    HullResult res;
    const std::size_t z = sys.rows.size() - 1;
    std::vector<Rational> rhs(z + 1, Rational(0));
    rhs[z] = Rational(1);
    FeasibilityResult f = ExactFeasibility::solve(sys.rows, rhs);
    if (!f.feasible) return res;
    res.inside = true;
    for (std::size_t j = 0; j < sys.candidates.size(); ++j) {
        if (f.solution[j].is_positive())
            res.certificate.support.emplace_back(sys.candidates[j], f.solution[j]);
    }
    return res;
}

HullResult solve_up_system(const UpSystem& sys) {
    HullResult res;
    if (sys.candidates.empty()) return res;
    if (!passes_sign_prefilter(sys)) return res;

    // Small systems go straight to the exact solver. Large ones consult a
    // floating-point oracle first; its infeasibility hint is accepted only
    // with an exactly verified Farkas certificate, and its feasibility hint
    // only when the exact solver confirms a witness on the suggested basis.
    if (sys.candidates.size() > 2048) {
        const IntSystem iv = int_view(sys);
        const FloatLpOutcome fl = float_phase1(iv);
        if (fl.trustworthy && !fl.looks_feasible && farkas_proves_infeasible(iv, fl.dual))
            return res;
        if (fl.trustworthy && fl.looks_feasible) {
            UpSystem reduced;
            for (std::size_t b : fl.basis) {
                if (b >= sys.candidates.size()) continue;
                reduced.candidates.push_back(sys.candidates[b]);
            }
            if (!reduced.candidates.empty()) {
                reduced.rows.assign(sys.rows.size(), {});
                for (std::size_t b : fl.basis) {
                    if (b >= sys.candidates.size()) continue;
                    for (std::size_t r = 0; r < sys.rows.size(); ++r)
                        reduced.rows[r].push_back(sys.rows[r][b]);
                }
                HullResult fast = exact_solve_up_system(reduced);
                if (fast.inside) return fast;
            }
        }
        // the oracle was inconclusive; fall through to the exact solver
    }
    return exact_solve_up_system(sys);
}

// y in Conv(S sel Up(y))?
HullResult hull_test_up_restricted(PointIndex y, const PointSet& base, int n) {
    const auto zeros = zero_coords(y, n);
    return solve_up_system(build_up_system(y, zeros, base));
}

constexpr std::size_t kMaxLpCells = 30'000'000;

}  // namespace

HullResult in_hull_up_candidates(PointIndex y, const std::vector<PointIndex>& candidates,
                                 int n) {
    HullResult res;
    if (candidates.empty()) return res;
    const auto zeros = zero_coords(y, n);
    const std::size_t z = zeros.size();
    UpSystem sys;
    sys.candidates = candidates;
    sys.rows.assign(z + 1, {});
    for (auto& r : sys.rows) r.reserve(candidates.size());
    for (PointIndex c : candidates) {
        if (!poset_leq_idx(y, c, n) || c == y)
            throw std::invalid_argument("in_hull_up_candidates: candidate not strictly above y");
        for (std::size_t r = 0; r < z; ++r)
            sys.rows[r].push_back(Rational(trit_at(c, zeros[r])));
        sys.rows[z].push_back(Rational(1));
    }
    return solve_up_system(sys);
}

HullResult in_hull_indices(PointIndex y, const std::vector<PointIndex>& points, int n) {
    if (points.empty()) throw std::invalid_argument("in_hull: empty point list");
    if ((std::size_t(n) + 1) * points.size() > kMaxLpCells)
        throw std::length_error("in_hull: instance too large");

    // trivial certificate when y is itself offered
    for (PointIndex p : points) {
        if (p == y) {
            HullResult res;
            res.inside = true;
            res.certificate.support.emplace_back(y, Rational(1));
            return res;
        }
    }

    std::vector<std::vector<Rational>> rows(std::size_t(n) + 1);
    for (auto& r : rows) r.reserve(points.size());
    for (PointIndex p : points) {
        PointIndex t = p;
        for (int c = 0; c < n; ++c) {
            rows[c].push_back(Rational(trit_from_digit(unsigned(t % 3))));
            t /= 3;
        }
        rows[n].push_back(Rational(1));
    }
    std::vector<Rational> rhs(std::size_t(n) + 1);
    {
        PointIndex t = y;
        for (int c = 0; c < n; ++c) {
            rhs[c] = Rational(trit_from_digit(unsigned(t % 3)));
            t /= 3;
        }
        rhs[n] = Rational(1);
    }
    FeasibilityResult f = ExactFeasibility::solve(rows, rhs);
    HullResult res;
    if (f.feasible) {
        res.inside = true;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (f.solution[j].is_positive())
                res.certificate.support.emplace_back(points[j], f.solution[j]);
        }
    }
    return res;
}

HullResult in_hull(const TernaryPoint& y, const std::vector<TernaryPoint>& points) {
    if (points.empty()) throw std::invalid_argument("in_hull: empty point list");
    const int n = y.dim();
    std::vector<PointIndex> idx;
    idx.reserve(points.size());
    for (const auto& p : points) {
        if (p.dim() != n) throw std::invalid_argument("in_hull: dimension mismatch");
        idx.push_back(encode(p));
    }
    return in_hull_indices(encode(y), idx, n);
}

bool verify_certificate(PointIndex y, const HullCertificate& cert, int n) {
    if (cert.support.empty()) return false;
    Rational total(0);
    std::vector<Rational> acc(n, Rational(0));
    for (const auto& [idx, lambda] : cert.support) {
        if (!lambda.is_positive()) return false;
        total += lambda;
        PointIndex t = idx;
        for (int c = 0; c < n; ++c) {
            const int trit = trit_from_digit(unsigned(t % 3));
            if (trit != 0) acc[c] += lambda * Rational(trit);
            t /= 3;
        }
    }
    if (total != Rational(1)) return false;
    PointIndex t = y;
    for (int c = 0; c < n; ++c) {
        if (acc[c] != Rational(trit_from_digit(unsigned(t % 3)))) return false;
        t /= 3;
    }
    return true;
}

PointSet hull_closure(const PointSet& s, unsigned threads) {
    const int n = s.dim();
    const std::uint64_t size = s.domain();
    std::vector<std::uint8_t> added(size, 0);
    parallel_for(size, threads, [&](std::size_t y) {
        if (s.test(y)) return;
        if (hull_test_up_restricted(PointIndex(y), s, n).inside) added[y] = 1;
    });
    PointSet out = s;
    for (PointIndex y = 0; y < size; ++y) {
        if (added[y]) out.set(y);
    }
    return out;
}

bool is_convex(const PointSet& s) {
    const int n = s.dim();
    for (PointIndex y = 0; y < s.domain(); ++y) {
        if (s.test(y)) continue;
        if (hull_test_up_restricted(y, s, n).inside) return false;
    }
    return true;
}

std::optional<ViolatingPair> find_minimal_violating_pair(const PointSet& s) {
    const int n = s.dim();
    for (PointIndex y = 0; y < s.domain(); ++y) {
        if (s.test(y)) continue;
        HullResult h = hull_test_up_restricted(y, s, n);
        if (!h.inside) continue;

        std::vector<PointIndex> support;
        for (const auto& [idx, lambda] : h.certificate.support) support.push_back(idx);
        std::sort(support.begin(), support.end());

        // Drop points one at a time in ascending index order. Hull membership
        // is monotone in the point set, so a single-drop-stable set is
        // minimal outright.
        std::size_t i = 0;
        while (i < support.size() && support.size() > 1) {
            std::vector<PointIndex> trial;
            trial.reserve(support.size() - 1);
            for (std::size_t j = 0; j < support.size(); ++j) {
                if (j != i) trial.push_back(support[j]);
            }
            if (in_hull_indices(y, trial, n).inside) support = std::move(trial);
            else ++i;
        }

        ViolatingPair pair;
        pair.points = std::move(support);
        pair.y = y;
        pair.minimal = true;
        return pair;
    }
    return std::nullopt;
}

bool verify_violating_pair(const PointSet& s, const ViolatingPair& pair) {
    if (s.test(pair.y)) return false;
    if (pair.points.empty()) return false;
    for (PointIndex p : pair.points) {
        if (!s.test(p)) return false;
    }
    HullResult h = in_hull_indices(pair.y, pair.points, s.dim());
    if (!h.inside) return false;
    if (pair.minimal) {
        for (PointIndex p : pair.points) {
            if (!poset_leq_idx(pair.y, p, s.dim())) return false;
        }
        if (pair.points.size() > 1) {
            for (std::size_t i = 0; i < pair.points.size(); ++i) {
                std::vector<PointIndex> trial;
                for (std::size_t j = 0; j < pair.points.size(); ++j) {
                    if (j != i) trial.push_back(pair.points[j]);
                }
                if (in_hull_indices(pair.y, trial, s.dim()).inside) return false;
            }
        }
    }
    return true;
}

namespace {

std::vector<PointSet> enumerate_convex(int n) {
    const std::uint64_t size = domain_size(n);
    std::vector<PointSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << size); ++mask) {
        PointSet s(n);
        for (std::uint64_t b = 0; b < size; ++b) {
            if ((mask >> b) & 1) s.set(b);
        }
        if (is_convex(s)) out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

const std::vector<PointSet>& all_convex_sets(int n) {
    if (n < 0 || n > 2)
        throw std::domain_error("all_convex_sets: supported only for n <= 2");
    static const std::vector<PointSet> c0 = enumerate_convex(0);
    static const std::vector<PointSet> c1 = enumerate_convex(1);
    static const std::vector<PointSet> c2 = enumerate_convex(2);
    switch (n) {
        case 0: return c0;
        case 1: return c1;
        default: return c2;
    }
}

Rational distance_to_convex_exact(const PointSet& s) {
    const int n = s.dim();
    if (n > 2)
        throw std::domain_error(
            "distance_to_convex_exact: exhaustive search is limited to n <= 2; "
            "use the triple/closure bounds instead");
    std::uint64_t best = ~std::uint64_t(0);
    for (const PointSet& t : all_convex_sets(n)) {
        best = std::min(best, s.symmetric_difference_size(t));
    }
    return Rational(std::int64_t(best), std::int64_t(domain_size(n)));
}

std::uint64_t pack_violating_triples(const PointSet& s) {
    const int n = s.dim();
    const std::uint64_t size = s.domain();
    std::vector<std::uint64_t> used((size + 63) / 64, 0);
    const auto used_test = [&](PointIndex i) {
        return (used[i >> 6] >> (i & 63)) & 1;
    };
    const auto used_set = [&](PointIndex i) {
        used[i >> 6] |= std::uint64_t(1) << (i & 63);
    };

    std::uint64_t packed = 0;
    std::vector<int> zeros;
    std::vector<unsigned> digit;
    std::vector<std::uint64_t> place;

    for (PointIndex y = 0; y < size; ++y) {
        if (s.test(y) || used_test(y)) continue;

        zeros.clear();
        {
            PointIndex t = y;
            for (int c = 0; c < n; ++c) {
                if (t % 3 == 0) zeros.push_back(c);
                t /= 3;
            }
        }
        if (zeros.empty()) continue;
        const std::size_t z = zeros.size();
        digit.assign(z, 0);
        place.resize(z);
        for (std::size_t k = 0; k < z; ++k) place[k] = pow3(zeros[k]);

        // Directions are trit vectors supported on the zero coordinates of y;
        // the sign is canonicalized so each line is visited once. The
        // midpoint-on-grid constraint is what keeps x = y - d and z = y + d
        // inside the cube.
        PointIndex plus = y, minus = y;
        bool taken = false;
        for (;;) {
            std::size_t k = 0;
            while (k < z) {
                if (digit[k] == 0) {
                    digit[k] = 1;  // direction trit +1
                    plus += place[k];
                    minus += 2 * place[k];
                    break;
                }
                if (digit[k] == 1) {
                    digit[k] = 2;  // direction trit -1
                    plus += place[k];
                    minus -= place[k];
                    break;
                }
                digit[k] = 0;
                plus -= 2 * place[k];
                minus -= place[k];
                ++k;
            }
            if (k == z) break;

            // canonical representative: lowest nonzero direction trit is +1
            std::size_t first = 0;
            while (digit[first] == 0) ++first;
            if (digit[first] != 1) continue;

            if (!s.test(plus) || !s.test(minus)) continue;
            if (used_test(plus) || used_test(minus)) continue;
            used_set(plus);
            used_set(minus);
            used_set(y);
            ++packed;
            taken = true;
            break;
        }
        (void)taken;
    }
    return packed;
}

Rational distance_lower_bound_triples(const PointSet& s) {
    const std::uint64_t packed = pack_violating_triples(s);
    return Rational(std::int64_t(packed), std::int64_t(3 * domain_size(s.dim())));
}

Rational distance_upper_bound_closure(const PointSet& s, double ell, unsigned threads) {
    const int n = s.dim();
    PointSet mid = PointSet::from_predicate(
        n, [&](PointIndex i) { return in_middle(weight_of_index(i, n), n, ell); });
    PointSet t = hull_closure(s.intersect(mid), threads);
    return Rational(std::int64_t(s.symmetric_difference_size(t)),
                    std::int64_t(domain_size(n)));
}

std::uint64_t closure_gap_count(const PointSet& s, double ell, unsigned threads) {
    const int n = s.dim();
    PointSet mid = PointSet::from_predicate(
        n, [&](PointIndex i) { return in_middle(weight_of_index(i, n), n, ell); });
    PointSet t = hull_closure(s.intersect(mid), threads);
    return t.intersect(mid).intersect(s.complement()).cardinality();
}

}  // namespace ternary
