#pragma once

#include <vector>

#include "ternary/point_set.hpp"
#include "ternary/rational.hpp"

namespace ternary {

// Membership as a sign: +1 inside, -1 outside. Fourier work runs on this
// form; set work runs on PointSet. The two are lossless converses.
struct SignFunction {
    int n = 0;
    std::vector<float> values;  // +-1 per PointIndex

    SignFunction() = default;
    explicit SignFunction(int dim) : n(dim), values(domain_size(dim), -1.0f) {}

    double operator()(PointIndex i) const { return values[i]; }

    static SignFunction from_set(const PointSet& s);
    PointSet to_set() const;
};

// Coefficients indexed like points: the frequency vector alpha lives in
// {0,+-1}^n and uses the same base-3 encoding. Degree of alpha = its weight.
struct FourierTable {
    int n = 0;
    std::vector<double> coeff;

    double operator()(PointIndex alpha) const { return coeff[alpha]; }
    double parseval_sum() const;
};

// Orthonormal single-coordinate basis: phi_0 == 1,
// phi_{-1} = (-sqrt6/2, 0, sqrt6/2) and phi_{+1} = (-sqrt2/2, sqrt2, -sqrt2/2)
// on inputs (-1, 0, +1).
double basis_eval_1d(int alpha_trit, int x_trit);
double basis_eval(const TernaryPoint& alpha, const TernaryPoint& x);
double basis_eval_idx(PointIndex alpha, PointIndex x, int n);

// Exact transform of an arbitrary real table by n per-coordinate passes
// (cost n*3^n). Capped at n <= 14 to bound memory.
FourierTable fourier_transform_exact(const std::vector<double>& f, int n);
FourierTable fourier_transform_exact(const SignFunction& f);

// Pointwise synthesis from a coefficient table (inverse transform).
std::vector<double> fourier_inverse(const FourierTable& table);

double spectral_mass_above(const FourierTable& table, int degree);

// Total influence in spectral form: sum of degree * coeff^2.
double fourier_influence_spectral(const FourierTable& table);

// Same quantity from line counting: (8/3) * (#non-constant axis lines) * 3^-n.
// Exact rational; the spectral and combinatorial routes must agree.
Rational fourier_influence_combinatorial(const SignFunction& f);
std::uint64_t nonconstant_line_count(const SignFunction& f);

struct FourierInfluenceReport {
    double spectral;
    Rational combinatorial;
    bool agree;  // |spectral - combinatorial| <= 1e-8
};

FourierInfluenceReport fourier_influence(const SignFunction& f);

// CSV export: alpha_index, alpha_trits, degree, coefficient.
void export_fourier_csv(const FourierTable& table, std::ostream& os);

}  // namespace ternary
