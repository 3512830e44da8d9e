#pragma once

namespace umaxpro {

/// Regularized lower incomplete gamma P(a, x).
double regularized_gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double regularized_gamma_q(double a, double x);

/// Survival function of the chi-square distribution with `df` degrees of
/// freedom; the p-value of a goodness-of-fit statistic.
double chi_square_sf(double x, int df);

}  // namespace umaxpro
