#include "ternary/fourier.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace ternary {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kSqrt6Half = 1.2247448713915890491;  // sqrt(6)/2
constexpr double kSqrt2Half = 0.7071067811865475244;  // sqrt(2)/2

// phi[alpha digit][x digit]; digits 0, 1, 2 encode trits 0, +1, -1.
constexpr double kPhi[3][3] = {
    {1.0, 1.0, 1.0},
    {kSqrt2, -kSqrt2Half, -kSqrt2Half},
    {0.0, kSqrt6Half, -kSqrt6Half},
};

constexpr int kTransformCap = 14;

}  // namespace

SignFunction SignFunction::from_set(const PointSet& s) {
    SignFunction f(s.dim());
    for (PointIndex i = 0; i < s.domain(); ++i) f.values[i] = s.test(i) ? 1.0f : -1.0f;
    return f;
}

PointSet SignFunction::to_set() const {
    PointSet s(n);
    for (PointIndex i = 0; i < s.domain(); ++i) {
        if (values[i] > 0) s.set(i);
    }
    return s;
}

double FourierTable::parseval_sum() const {
    double s = 0.0;
    for (double c : coeff) s += c * c;
    return s;
}

double basis_eval_1d(int alpha_trit, int x_trit) {
    return kPhi[digit_from_trit(alpha_trit)][digit_from_trit(x_trit)];
}

double basis_eval(const TernaryPoint& alpha, const TernaryPoint& x) {
    if (alpha.dim() != x.dim()) throw std::invalid_argument("basis_eval: dimension mismatch");
    double v = 1.0;
    for (int i = 0; i < alpha.dim(); ++i) v *= basis_eval_1d(alpha.coords[i], x.coords[i]);
    return v;
}

double basis_eval_idx(PointIndex alpha, PointIndex x, int n) {
    double v = 1.0;
    for (int i = 0; i < n; ++i) {
        v *= kPhi[alpha % 3][x % 3];
        alpha /= 3;
        x /= 3;
    }
    return v;
}

FourierTable fourier_transform_exact(const std::vector<double>& f, int n) {
    if (n > kTransformCap) throw std::domain_error("fourier_transform_exact: dimension cap exceeded");
    const std::uint64_t size = domain_size(n);
    if (f.size() != size) throw std::invalid_argument("fourier_transform_exact: size mismatch");
    std::vector<double> buf = f;
    // one orthonormal 3-point rotation per coordinate
    for (int c = 0; c < n; ++c) {
        const std::uint64_t p = pow3(c);
        for (PointIndex i = 0; i < size; ++i) {
            if ((i / p) % 3 != 0) continue;
            const double f0 = buf[i], f1 = buf[i + p], f2 = buf[i + 2 * p];
            buf[i] = (f0 + f1 + f2) / 3.0;
            buf[i + p] = (kSqrt2 * f0 - kSqrt2Half * (f1 + f2)) / 3.0;
            buf[i + 2 * p] = (kSqrt6Half * (f1 - f2)) / 3.0;
        }
    }
    FourierTable t;
    t.n = n;
    t.coeff = std::move(buf);
    return t;
}

FourierTable fourier_transform_exact(const SignFunction& f) {
    std::vector<double> v(f.values.begin(), f.values.end());
    return fourier_transform_exact(v, f.n);
}

std::vector<double> fourier_inverse(const FourierTable& table) {
    const int n = table.n;
    const std::uint64_t size = domain_size(n);
    std::vector<double> buf = table.coeff;
    for (int c = 0; c < n; ++c) {
        const std::uint64_t p = pow3(c);
        for (PointIndex i = 0; i < size; ++i) {
            if ((i / p) % 3 != 0) continue;
            const double g0 = buf[i], g1 = buf[i + p], g2 = buf[i + 2 * p];
            buf[i] = g0 + kSqrt2 * g1;
            buf[i + p] = g0 - kSqrt2Half * g1 + kSqrt6Half * g2;
            buf[i + 2 * p] = g0 - kSqrt2Half * g1 - kSqrt6Half * g2;
        }
    }
    return buf;
}

double spectral_mass_above(const FourierTable& table, int degree) {
    double s = 0.0;
    for (PointIndex a = 0; a < table.coeff.size(); ++a) {
        if (weight_of_index(a, table.n) > degree) s += table.coeff[a] * table.coeff[a];
    }
    return s;
}

double fourier_influence_spectral(const FourierTable& table) {
    double s = 0.0;
    for (PointIndex a = 0; a < table.coeff.size(); ++a) {
        s += double(weight_of_index(a, table.n)) * table.coeff[a] * table.coeff[a];
    }
    return s;
}

std::uint64_t nonconstant_line_count(const SignFunction& f) {
    const int n = f.n;
    const std::uint64_t size = domain_size(n);
    std::uint64_t lines = 0;
    for (int c = 0; c < n; ++c) {
        const std::uint64_t p = pow3(c);
        for (PointIndex i = 0; i < size; ++i) {
            if ((i / p) % 3 != 0) continue;
            const float v0 = f.values[i];
            if (f.values[i + p] != v0 || f.values[i + 2 * p] != v0) ++lines;
        }
    }
    return lines;
}

Rational fourier_influence_combinatorial(const SignFunction& f) {
    const std::uint64_t lines = nonconstant_line_count(f);
    return Rational(std::int64_t(8 * lines), std::int64_t(3 * domain_size(f.n)));
}

FourierInfluenceReport fourier_influence(const SignFunction& f) {
    FourierInfluenceReport r;
    r.combinatorial = fourier_influence_combinatorial(f);
    r.spectral = fourier_influence_spectral(fourier_transform_exact(f));
    r.agree = std::abs(r.spectral - r.combinatorial.to_double()) <= 1e-8;
    return r;
}

void export_fourier_csv(const FourierTable& table, std::ostream& os) {
    os << "alpha_index,alpha_trits,degree,coefficient\n";
    for (PointIndex a = 0; a < table.coeff.size(); ++a) {
        os << a << ",";
        PointIndex t = a;
        for (int i = 0; i < table.n; ++i) {
            const int trit = trit_from_digit(unsigned(t % 3));
            os << (trit == 1 ? "+" : (trit == -1 ? "-" : "0"));
            t /= 3;
        }
        os << "," << weight_of_index(a, table.n) << "," << table.coeff[a] << "\n";
    }
}

}  // namespace ternary
