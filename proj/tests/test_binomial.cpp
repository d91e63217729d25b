#include <cmath>

#include "doctest.h"
#include "ternary/binomial_approx.hpp"
#include "ternary/rng.hpp"

using namespace ternary;

TEST_CASE("exact binomials") {
    CHECK(big_binomial(7, 0).to_u64() == 1);
    CHECK(big_binomial(7, 7).to_u64() == 1);
    CHECK(big_binomial(16, 8).to_u64() == 12870);
    CHECK(big_binomial(5, 2).to_u64() == 10);
    CHECK_THROWS(big_binomial(4, 5));

    // Pascal identity on sampled cells up to n=200
    Rng rng(1);
    for (int trial = 0; trial < 300; ++trial) {
        const unsigned n = 2 + unsigned(rng.below(199));
        const unsigned k = 1 + unsigned(rng.below(n - 1));
        CHECK(big_binomial(n, k) == big_binomial(n - 1, k - 1) + big_binomial(n - 1, k));
    }
}

TEST_CASE("big integer plumbing") {
    CHECK(big_factorial(10).to_u64() == 3628800);
    CHECK(big_factorial(0).to_u64() == 1);
    BigUint a(123456789);
    a.mul_small(1000000007);
    CHECK(a.str() == "123456789864197523");
    a.mul_small(999999999999999989ULL);  // force multi-limb
    CHECK(a.str() == "123456789864197521641975311493827247");
    BigUint b = big_pow(2, 200);
    CHECK(b.bit_length() == 201);
    CHECK(std::abs(double(b.log2()) - 200.0) < 1e-12);
    // subtraction and comparison
    CHECK(big_pow(3, 40) - big_pow(3, 40) == BigUint(0));
    CHECK(big_pow(2, 100) > big_pow(2, 99));
}

TEST_CASE("central approximation: zero offset recovers the Stirling value") {
    for (int n : {100, 200, 400}) {
        const auto rep = approx_vs_exact_central(n, 0);
        CHECK(std::abs(double(rep.log_ratio)) < 0.01);
    }
    // rejects mismatched parity
    CHECK_THROWS(approx_vs_exact_central(100, 3));
}

TEST_CASE("central approximation error shrinks like 1/n at moderate offsets") {
    const auto r100 = approx_vs_exact_central(100, 10);
    CHECK(std::abs(double(r100.log_ratio)) < 1.0 / 50.0);
    // same relative offset tau ~ n^0.7 at n four times larger
    const auto r400 = approx_vs_exact_central(400, 26);
    CHECK(std::abs(double(r400.log_ratio)) < std::abs(double(r100.log_ratio)));
}

TEST_CASE("central approximation sweep gate: |log ratio| <= 1/sqrt(n)") {
    for (int n = 50; n <= 400; n += 50) {
        int tau = int(std::floor(std::pow(double(n), 0.7)));
        if ((n - tau) % 2 != 0) --tau;
        const auto rep = approx_vs_exact_central(n, tau);
        CHECK(std::abs(double(rep.log_ratio)) <= 1.0 / std::sqrt(double(n)));
    }
}

TEST_CASE("family proxy: s=2 closed form and constant-factor window") {
    const int n = 400;
    int tau = int(std::floor(std::pow(double(n), 0.75)));
    if ((n - tau) % 2 != 0) --tau;
    // s=2 is exactly 2^n/sqrt(n) exp(-tau^2/2n)
    const long double expect =
        n * std::log(2.0L) - 0.5L * std::log((long double)n) -
        (long double)(tau) * tau / (2.0L * n);
    CHECK(std::abs(double(ln_approx_binomial_family(n, tau, 2) - expect)) < 1e-9);

    for (int nn : {100, 200, 400}) {
        int t = int(std::floor(std::pow(double(nn), 0.75)));
        if ((nn - t) % 2 != 0) --t;
        const long double ln_exact = big_binomial(unsigned(nn), unsigned((nn - t) / 2)).ln();
        const double ratio = double(expl(ln_exact - ln_approx_binomial_family(nn, t, 2)));
        CHECK(ratio >= 0.25);
        CHECK(ratio <= 4.0);
    }
}

TEST_CASE("factorial sandwich") {
    const auto s1 = stirling_sandwich(1);
    CHECK(double(expl(s1.ln_lower)) == doctest::Approx(0.99587).epsilon(1e-4));
    CHECK(double(expl(s1.ln_upper)) == doctest::Approx(1.00227).epsilon(1e-4));
    CHECK(s1.holds);

    const auto s10 = stirling_sandwich(10);
    CHECK(s10.holds);
    CHECK(double(expl(s10.ln_exact)) == doctest::Approx(3628800.0).epsilon(1e-9));

    double prev_gap = 1e9;
    for (int n = 1; n <= 170; ++n) {
        const auto s = stirling_sandwich(n);
        CHECK(s.holds);
        const double gap = double(s.ln_upper - s.ln_lower);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
}

TEST_CASE("exponential series identities to 1e-12") {
    for (int n = 2; n <= 1000; ++n) {
        CHECK(exp_series_identity_error(n) <= 1e-12);
    }
}
