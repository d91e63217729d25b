#include "ternary/binomial_approx.hpp"

#include <cmath>
#include <stdexcept>

namespace ternary {

namespace {

constexpr long double kPi = 3.14159265358979323846264338328L;
constexpr long double kLn2 = 0.6931471805599453094172321215L;

long double central_series(long double ratio, long double tau) {
    // tau * sum_k ratio^(2k-1) (1/(2k-1) - 1/(2k)); terms decay like ratio^2
    long double sum = 0.0L;
    long double pow_r = ratio;
    for (int k = 1;; ++k) {
        const long double term = pow_r * (1.0L / (2 * k - 1) - 1.0L / (2 * k));
        sum += term;
        pow_r *= ratio * ratio;
        // geometric tail bound: remaining mass < pow_r / (1 - ratio^2)
        if (pow_r / (1.0L - ratio * ratio) < 1e-30L) break;
        if (k > 100000) break;
    }
    return tau * sum;
}

}  // namespace

long double ln_approx_central_binomial(int n, int tau) {
    if (tau < 0 || double(tau) > 0.9 * n)
        throw std::domain_error("ln_approx_central_binomial: tau out of range");
    const long double nn = n, tt = tau;
    const long double ln_prefix =
        nn * kLn2 + 0.5L * logl(2.0L * nn / (kPi * (nn - tt) * (nn + tt)));
    return ln_prefix - central_series(tt / nn, tt);
}

ApproxReport approx_vs_exact_central(int n, int tau) {
    if ((n - tau) % 2 != 0)
        throw std::domain_error("approx_vs_exact_central: n and tau must share parity");
    ApproxReport rep;
    rep.n = n;
    rep.tau = tau;
    rep.ln_exact = big_binomial(unsigned(n), unsigned((n - tau) / 2)).ln();
    rep.ln_approx = ln_approx_central_binomial(n, tau);
    rep.log_ratio = rep.ln_exact - rep.ln_approx;
    return rep;
}

long double ln_approx_binomial_family(int n, int tau, int s) {
    if (s < 1) throw std::invalid_argument("ln_approx_binomial_family: s >= 1");
    const long double nn = n, tt = tau;
    long double expo = 0.0L;
    for (int k = 1; k <= s - 1; ++k) {
        expo += powl(tt, 2.0L * k) / powl(nn, 2.0L * k - 1) *
                (1.0L / (2 * k - 1) - 1.0L / (2 * k));
    }
    return nn * kLn2 - 0.5L * logl(nn) - expo;
}

StirlingSandwich stirling_sandwich(int n) {
    if (n < 1) throw std::invalid_argument("stirling_sandwich: n >= 1");
    StirlingSandwich s;
    const long double nn = n;
    const long double base = 0.5L * logl(2.0L * kPi * nn) + nn * (logl(nn) - 1.0L);
    s.ln_lower = base + 1.0L / (12.0L * nn + 1.0L);
    s.ln_upper = base + 1.0L / (12.0L * nn);
    if (n <= 30) {
        s.ln_exact = big_factorial(unsigned(n)).ln();
    } else {
        long double acc = 0.0L;
        for (int k = 2; k <= n; ++k) acc += logl((long double)k);
        s.ln_exact = acc;
    }
    s.holds = s.ln_lower <= s.ln_exact && s.ln_exact <= s.ln_upper;
    return s;
}

double exp_series_identity_error(int big_n) {
    if (big_n <= 1) throw std::invalid_argument("exp_series_identity_error: N > 1");
    const long double nn = big_n;
    // plus: (1 + 1/N)^N = exp(1 - sum_k (-1)^(k+1) / (N^k (k+1)))
    // minus: (1 - 1/N)^N = exp(-1 - sum_k 1 / (N^k (k+1)))
    long double sum_plus = 0.0L, sum_minus = 0.0L;
    long double pow_n = nn;
    for (int k = 1;; ++k) {
        const long double mag = 1.0L / (pow_n * (k + 1));
        sum_plus += (k % 2 == 1 ? mag : -mag);
        sum_minus += mag;
        pow_n *= nn;
        if (1.0L / (pow_n * (k + 2)) / (1.0L - 1.0L / nn) < 1e-18L) break;
    }
    const long double lhs_plus = powl(1.0L + 1.0L / nn, nn);
    const long double rhs_plus = expl(1.0L - sum_plus);
    const long double lhs_minus = powl(1.0L - 1.0L / nn, nn);
    const long double rhs_minus = expl(-1.0L - sum_minus);
    return double(std::max(fabsl(lhs_plus - rhs_plus), fabsl(lhs_minus - rhs_minus)));
}

}  // namespace ternary
