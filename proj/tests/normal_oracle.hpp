#pragma once

// High-precision standard normal CDF and quantile oracle, independent of
// the library implementation: erf Maclaurin series plus a Laplace continued
// fraction for the tail, evaluated in long double, inverted by bisection.

#include <cmath>

namespace normal_oracle {

inline long double erf_series(long double x) {
    // valid for |x| <= 2 where the series has no destructive cancellation
    long double term = x;
    long double sum = x;
    for (int n = 1; n < 200; ++n) {
        term *= -x * x / n;
        long double add = term / (2 * n + 1);
        sum += add;
        if (std::fabs(add) < 1e-22L * std::fabs(sum)) break;
    }
    const long double two_over_sqrt_pi = 1.1283791670955125738961589031L;
    return two_over_sqrt_pi * sum;
}

inline long double erfc_cf(long double x) {
    // erfc(x) = e^{-x^2}/sqrt(pi) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))),
    // x > 2, evaluated with modified Lentz
    const long double tiny = 1e-300L;
    long double f = x;
    long double c = x;
    long double d = 0.0L;
    for (int i = 1; i <= 400; ++i) {
        long double a = i * 0.5L;
        d = x + a * d;
        if (std::fabs(d) < tiny) d = tiny;
        d = 1.0L / d;
        c = x + a / c;
        if (std::fabs(c) < tiny) c = tiny;
        long double del = c * d;
        f *= del;
        if (std::fabs(del - 1.0L) < 1e-21L) break;
    }
    const long double inv_sqrt_pi = 0.5641895835477562869480794516L;
    return std::exp(-x * x) * inv_sqrt_pi / f;
}

inline long double erfc_oracle(long double x) {
    if (x < 0.0L) return 2.0L - erfc_oracle(-x);
    if (x <= 2.0L) return 1.0L - erf_series(x);
    return erfc_cf(x);
}

inline long double cdf(long double z) {
    const long double inv_sqrt2 = 0.70710678118654752440084436210L;
    return 0.5L * erfc_oracle(-z * inv_sqrt2);
}

inline double quantile(double p) {
    // reflect the upper tail so the bisection target never cancels
    if (p > 0.5) return -quantile(1.0 - p);
    long double lo = -40.0L, hi = 40.0L;
    for (int it = 0; it < 200; ++it) {
        long double mid = 0.5L * (lo + hi);
        if (cdf(mid) < static_cast<long double>(p)) lo = mid;
        else hi = mid;
        if (hi - lo < 1e-13L) break;
    }
    return static_cast<double>(0.5L * (lo + hi));
}

}  // namespace normal_oracle
