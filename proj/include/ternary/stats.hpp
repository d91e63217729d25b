#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace ternary {

// Merge-only accumulator: count, sum, sum of squares. Merging is associative
// and commutative, so aggregation order (and thread count) cannot change the
// result of an ordered reduction over trial slots.
struct Accumulator {
    std::uint64_t count = 0;
    double sum = 0.0;
    double sum_sq = 0.0;

    void add(double v) {
        ++count;
        sum += v;
        sum_sq += v * v;
    }

    void merge(const Accumulator& o) {
        count += o.count;
        sum += o.sum;
        sum_sq += o.sum_sq;
    }

    double mean() const { return count == 0 ? 0.0 : sum / double(count); }

    double variance() const {
        if (count < 2) return 0.0;
        const double m = mean();
        return std::max(0.0, (sum_sq - double(count) * m * m) / double(count - 1));
    }

    double stderr_mean() const {
        return count == 0 ? 0.0 : std::sqrt(variance() / double(count));
    }
};

// |observed/trials - p| within k binomial standard deviations.
inline bool binomial_gate(std::uint64_t observed, std::uint64_t trials, double p, double k) {
    const double sigma = std::sqrt(double(trials) * p * (1.0 - p));
    return std::abs(double(observed) - double(trials) * p) <= k * sigma + 1e-9;
}

// Least-squares slope of y against x.
inline double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= double(n);
    my /= double(n);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        num += (x[i] - mx) * (y[i] - my);
        den += (x[i] - mx) * (x[i] - mx);
    }
    return num / den;
}

// Upper chi-square quantile via the Wilson-Hilferty cube approximation.
inline double chi_square_quantile(int dof, double z_upper) {
    const double d = double(dof);
    const double t = 1.0 - 2.0 / (9.0 * d) + z_upper * std::sqrt(2.0 / (9.0 * d));
    return d * t * t * t;
}

}  // namespace ternary
