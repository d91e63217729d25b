#include "ternary/simplex.hpp"

#include <cstddef>
#include <stdexcept>

namespace ternary {

FeasibilityResult ExactFeasibility::solve(const std::vector<std::vector<Rational>>& a,
                                          const std::vector<Rational>& b) {
    const std::size_t m = a.size();
    const std::size_t k = m == 0 ? 0 : a[0].size();
    if (b.size() != m) throw std::invalid_argument("ExactFeasibility: rhs size mismatch");

    // Tableau columns: [0, k) decision variables, [k, k+m) artificials.
    const std::size_t cols = k + m;
    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols));
    std::vector<Rational> rhs(m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = b[i].is_negative();
        for (std::size_t j = 0; j < k; ++j) t[i][j] = flip ? -a[i][j] : a[i][j];
        t[i][k + i] = Rational(1);
        rhs[i] = flip ? -b[i] : b[i];
    }

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = k + i;

    // Reduced costs for minimizing the artificial sum, with the artificial
    // basis already priced out.
    std::vector<Rational> obj(cols);
    Rational obj_val(0);
    for (std::size_t j = 0; j < k; ++j) {
        Rational s(0);
        for (std::size_t i = 0; i < m; ++i) s += t[i][j];
        obj[j] = -s;
    }
    for (std::size_t i = 0; i < m; ++i) obj_val -= rhs[i];

    for (;;) {
        // Bland: entering = lowest-index column with negative reduced cost.
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            if (obj[j].is_negative()) {
                enter = j;
                break;
            }
        }
        if (enter == cols) break;  // optimal

        // Leaving: minimum ratio; ties broken by the lowest basic index.
        std::size_t leave = m;
        Rational best_ratio(0);
        for (std::size_t i = 0; i < m; ++i) {
            if (!t[i][enter].is_positive()) continue;
            Rational ratio = rhs[i] / t[i][enter];
            if (leave == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m)
            throw std::logic_error("ExactFeasibility: unbounded phase-1 objective");

        // Pivot on (leave, enter).
        const Rational piv = t[leave][enter];
        for (std::size_t j = 0; j < cols; ++j) t[leave][j] /= piv;
        rhs[leave] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter].is_zero()) continue;
            const Rational f = t[i][enter];
            for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
            rhs[i] -= f * rhs[leave];
        }
        if (!obj[enter].is_zero()) {
            const Rational f = obj[enter];
            for (std::size_t j = 0; j < cols; ++j) obj[j] -= f * t[leave][j];
            obj_val -= f * rhs[leave];
        }
        basis[leave] = enter;
    }

    FeasibilityResult res;
    res.feasible = obj_val.is_zero();
    if (res.feasible) {
        res.solution.assign(k, Rational(0));
        for (std::size_t i = 0; i < m; ++i) {
            if (basis[i] < k) res.solution[basis[i]] = rhs[i];
        }
    }
    return res;
}

}  // namespace ternary
