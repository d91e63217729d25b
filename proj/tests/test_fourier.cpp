#include <cmath>
#include <sstream>

#include "doctest.h"
#include "ternary/fourier.hpp"
#include "ternary/influence.hpp"
#include "ternary/rng.hpp"

using namespace ternary;

namespace {

PointSet random_set(int n, double density, Rng& rng) {
    PointSet s(n);
    for (PointIndex i = 0; i < domain_size(n); ++i) {
        if (rng.uniform01() < density) s.set(i);
    }
    return s;
}

}  // namespace

TEST_CASE("single-coordinate basis is orthonormal") {
    for (int a = -1; a <= 1; ++a) {
        for (int b = -1; b <= 1; ++b) {
            double ip = 0.0;
            for (int x = -1; x <= 1; ++x) ip += basis_eval_1d(a, x) * basis_eval_1d(b, x) / 3.0;
            CHECK(std::abs(ip - (a == b ? 1.0 : 0.0)) < 1e-12);
        }
    }
}

TEST_CASE("basis fixed values") {
    const int n = 5;
    // the all-zero frequency is the constant 1
    for (PointIndex x = 0; x < domain_size(n); ++x)
        CHECK(basis_eval_idx(0, x, n) == 1.0);
    // value at the origin of the all-plus frequency is sqrt(2)^n
    TernaryPoint ones(n), origin(n);
    for (int i = 0; i < n; ++i) ones.coords[i] = 1;
    CHECK(std::abs(basis_eval(ones, origin) - std::pow(std::sqrt(2.0), n)) < 1e-12);
}

TEST_CASE("transform of the constant function") {
    SignFunction f(3);
    for (auto& v : f.values) v = 1.0f;
    const FourierTable t = fourier_transform_exact(f);
    CHECK(std::abs(t.coeff[0] - 1.0) < 1e-12);
    for (PointIndex a = 1; a < t.coeff.size(); ++a) CHECK(std::abs(t.coeff[a]) < 1e-12);
}

TEST_CASE("transform agrees with the direct inner-product definition") {
    Rng rng(5);
    const int n = 4;
    std::vector<double> f(domain_size(n));
    for (auto& v : f) v = rng.uniform(-2.0, 2.0);
    const FourierTable t = fourier_transform_exact(f, n);
    for (PointIndex a = 0; a < domain_size(n); a += 7) {
        double ip = 0.0;
        for (PointIndex x = 0; x < domain_size(n); ++x) ip += f[x] * basis_eval_idx(a, x, n);
        ip /= double(domain_size(n));
        CHECK(std::abs(ip - t.coeff[a]) < 1e-10);
    }
}

TEST_CASE("Parseval and inversion on random sign functions at n=5") {
    Rng rng(6);
    for (int trial = 0; trial < 100; ++trial) {
        const PointSet s = random_set(5, rng.uniform01(), rng);
        const SignFunction f = SignFunction::from_set(s);
        const FourierTable t = fourier_transform_exact(f);
        CHECK(std::abs(t.parseval_sum() - 1.0) <= 1e-9);
        const auto back = fourier_inverse(t);
        for (PointIndex i = 0; i < back.size(); ++i)
            CHECK(std::abs(back[i] - double(f.values[i])) <= 1e-9);
    }
}

TEST_CASE("Plancherel for real-valued tables at n<=6") {
    Rng rng(8);
    for (int n = 2; n <= 6; ++n) {
        std::vector<double> f(domain_size(n));
        for (auto& v : f) v = rng.uniform(-1.0, 1.0);
        const FourierTable t = fourier_transform_exact(f, n);
        double e2 = 0.0;
        for (double v : f) e2 += v * v;
        e2 /= double(domain_size(n));
        CHECK(std::abs(t.parseval_sum() - e2) <= 1e-9);
    }
}

TEST_CASE("spectral mass above a degree: limits and monotonicity") {
    Rng rng(9);
    const int n = 6;
    const PointSet s = random_set(n, 0.4, rng);
    const FourierTable t = fourier_transform_exact(SignFunction::from_set(s));
    CHECK(std::abs(spectral_mass_above(t, -1) - 1.0) <= 1e-9);
    CHECK(spectral_mass_above(t, n) == 0.0);
    double prev = spectral_mass_above(t, -1);
    for (int d = 0; d <= n; ++d) {
        const double cur = spectral_mass_above(t, d);
        CHECK(cur <= prev + 1e-12);
        prev = cur;
    }
}

TEST_CASE("influence: fixed examples") {
    CHECK(influence(PointSet(3)) == Rational(0));
    CHECK(influence(PointSet(3).complement()) == Rational(0));
    // origin singleton at n=2: 4 boundary adjacencies, 8 ordered pairs
    PointSet origin_only(2);
    origin_only.set(0);
    CHECK(boundary_edge_count(origin_only) == 4);
    CHECK(influence(origin_only) == Rational(8, 9));
}

TEST_CASE("influence equals the naive per-point recount; complement invariance") {
    Rng rng(10);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + int(rng.below(4));  // 2..5
        const PointSet s = random_set(n, rng.uniform01(), rng);
        const Rational a = influence(s);
        CHECK(a == influence_naive(s));
        CHECK(a == influence(s.complement()));
    }
}

TEST_CASE("Fourier influence: the origin singleton at n=2") {
    PointSet origin_only(2);
    origin_only.set(0);
    const SignFunction f = SignFunction::from_set(origin_only);
    // exactly two axis lines are non-constant: the two through the origin
    CHECK(nonconstant_line_count(f) == 2);
    const auto rep = fourier_influence(f);
    CHECK(rep.combinatorial == Rational(16, 27));
    CHECK(std::abs(rep.spectral - 16.0 / 27.0) <= 1e-12);
    CHECK(rep.agree);
}

TEST_CASE("constant functions have zero Fourier influence") {
    SignFunction f(4);
    for (auto& v : f.values) v = -1.0f;
    const auto rep = fourier_influence(f);
    CHECK(rep.combinatorial == Rational(0));
    CHECK(rep.spectral == 0.0);
}

TEST_CASE("spectral vs combinatorial agreement and the influence sandwich") {
    Rng rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + int(rng.below(4));  // 2..5
        const PointSet s = random_set(n, rng.uniform01(), rng);
        const SignFunction f = SignFunction::from_set(s);
        const auto rep = fourier_influence(f);
        CHECK(rep.agree);
        // per-adjacency influence against the spectral form, exact rationals:
        // 3/8 * I_fourier <= boundary/3^n <= 3/4 * I_fourier
        const Rational undirected = influence(s) / Rational(2);
        CHECK(Rational(3, 8) * rep.combinatorial <= undirected);
        CHECK(undirected <= Rational(3, 4) * rep.combinatorial);
    }
}

TEST_CASE("sign function round trips through sets") {
    Rng rng(13);
    const PointSet s = random_set(4, 0.5, rng);
    CHECK(SignFunction::from_set(s).to_set() == s);
}

TEST_CASE("csv export shape") {
    PointSet s(2);
    s.set(3);
    std::stringstream ss;
    export_fourier_csv(fourier_transform_exact(SignFunction::from_set(s)), ss);
    std::string header;
    std::getline(ss, header);
    CHECK(header == "alpha_index,alpha_trits,degree,coefficient");
    int rows = 0;
    std::string line;
    while (std::getline(ss, line)) ++rows;
    CHECK(rows == 9);
}
