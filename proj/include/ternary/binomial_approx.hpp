#pragma once

#include "ternary/bigint.hpp"

namespace ternary {

// Central-region binomial machinery: exact big-integer values next to their
// closed-form approximations, compared in the log domain.

struct ApproxReport {
    int n = 0;
    int tau = 0;
    long double ln_exact = 0.0L;   // ln C(n, (n-tau)/2)
    long double ln_approx = 0.0L;
    long double log_ratio = 0.0L;  // ln(exact / approx)
};

// ln of 2^n sqrt(2n / (pi (n-tau)(n+tau))) / exp(tau * sum_{k>=1} (tau/n)^(2k-1)
// (1/(2k-1) - 1/(2k))), the series truncated once its geometric tail bound
// drops below 1e-30. Requires n == tau (mod 2) for the exact comparison and
// tau <= 0.9 n.
long double ln_approx_central_binomial(int n, int tau);

ApproxReport approx_vs_exact_central(int n, int tau);

// Constant-factor proxy 2^n / sqrt(n) * exp(-sum_{k=1}^{s-1} tau^{2k}/n^{2k-1}
// (1/(2k-1) - 1/(2k))); consumers treat it as correct up to Theta(1).
long double ln_approx_binomial_family(int n, int tau, int s);

struct StirlingSandwich {
    long double ln_lower = 0.0L;
    long double ln_exact = 0.0L;
    long double ln_upper = 0.0L;
    bool holds = false;
};

// sqrt(2 pi n) (n/e)^n e^(1/(12n+1)) <= n! <= same with e^(1/(12n)).
// Exact factorial for n <= 30, log-domain beyond; valid through n = 170.
StirlingSandwich stirling_sandwich(int n);

// (1 +- 1/N)^N against their exponential-series closed forms; returns the
// worst absolute error over both signs with the series truncated at
// geometric-tail precision 1e-18.
double exp_series_identity_error(int big_n);

}  // namespace ternary
