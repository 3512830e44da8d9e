#include "umaxpro/statmodel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace umaxpro {

void Marginal::validate() const {
    if (!(std > 0.0)) throw DesignError("marginal std must be positive");
    if (kind == MarginalKind::lognormal && !(mean > 0.0))
        throw DesignError("lognormal marginal requires a positive mean");
}

InputModel InputModel::independent(std::vector<Marginal> marginals) {
    InputModel model;
    const int d = static_cast<int>(marginals.size());
    model.marginals = std::move(marginals);
    model.correlation.assign(static_cast<std::size_t>(d) * d, 0.0);
    for (int i = 0; i < d; ++i) model.correlation[static_cast<std::size_t>(i) * d + i] = 1.0;
    return model;
}

void InputModel::validate() const {
    const int d = dim();
    if (d < 1) throw DesignError("input model needs at least one marginal");
    for (const auto& m : marginals) m.validate();
    if (correlation.size() != static_cast<std::size_t>(d) * d)
        throw DesignError("correlation matrix shape mismatch");
    for (int i = 0; i < d; ++i) {
        if (correlation[static_cast<std::size_t>(i) * d + i] != 1.0)
            throw DesignError("correlation diagonal must be 1");
        for (int j = 0; j < i; ++j)
            if (correlation[static_cast<std::size_t>(i) * d + j] !=
                correlation[static_cast<std::size_t>(j) * d + i])
                throw DesignError("correlation matrix must be symmetric");
    }
    cholesky_lower(correlation, d);  // throws on non-PD
}

double std_normal_cdf(double z) {
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

namespace {

// Rational approximation for the standard normal quantile (Acklam),
// polished below by two Halley iterations against erfc-based Phi.
double inv_cdf_seed(double p) {
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double p_low = 0.02425;
    if (p < p_low) {
        double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - p_low) {
        double q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    double q = p - 0.5;
    double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace

double std_normal_inv_cdf(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("std_normal_inv_cdf: p must lie in (0,1)");
    // work in the lower tail where cdf(x) - p does not cancel; 1 - p is
    // exact for p >= 0.5
    if (p > 0.5) return -std_normal_inv_cdf(1.0 - p);
    double x = inv_cdf_seed(p);
    const double sqrt_2pi = 2.5066282746310002;
    for (int it = 0; it < 2; ++it) {
        double e = std_normal_cdf(x) - p;
        double u = e * sqrt_2pi * std::exp(0.5 * x * x);
        x -= u / (1.0 + 0.5 * x * u);  // Halley step
    }
    return x;
}

double marginal_inv_cdf(const Marginal& m, double p) {
    m.validate();
    double z = std_normal_inv_cdf(p);
    if (m.kind == MarginalKind::normal) return m.mean + m.std * z;
    double cv = m.std / m.mean;
    double sigma2 = std::log1p(cv * cv);
    double mu = std::log(m.mean) - 0.5 * sigma2;
    return std::exp(mu + std::sqrt(sigma2) * z);
}

std::vector<double> cholesky_lower(const std::vector<double>& matrix, int d) {
    if (matrix.size() != static_cast<std::size_t>(d) * d)
        throw DesignError("cholesky: matrix shape mismatch");
    std::vector<double> lower(static_cast<std::size_t>(d) * d, 0.0);
    auto l = [&](int i, int j) -> double& { return lower[static_cast<std::size_t>(i) * d + j]; };
    auto a = [&](int i, int j) { return matrix[static_cast<std::size_t>(i) * d + j]; };
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = a(i, j);
            for (int k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            if (i == j) {
                if (!(s > 0.0))
                    throw DesignError("cholesky: matrix not positive definite at pivot " +
                                      std::to_string(i));
                l(i, j) = std::sqrt(s);
            } else {
                l(i, j) = s / l(j, j);
            }
        }
    }
    return lower;
}

CopulaTransform::CopulaTransform(InputModel model) : model_(std::move(model)) {
    model_.validate();
    const int d = model_.dim();
    chol_ = cholesky_lower(model_.correlation, d);
    identity_corr_ = true;
    for (int i = 0; i < d && identity_corr_; ++i)
        for (int j = 0; j < d; ++j)
            if (model_.correlation[static_cast<std::size_t>(i) * d + j] != (i == j ? 1.0 : 0.0)) {
                identity_corr_ = false;
                break;
            }
}

std::vector<double> CopulaTransform::operator()(std::span<const double> u) const {
    const int d = model_.dim();
    if (u.size() != static_cast<std::size_t>(d))
        throw DesignError("copula transform: input row length mismatch");
    std::vector<double> out(d);
    if (identity_corr_) {
        for (int v = 0; v < d; ++v) out[v] = marginal_inv_cdf(model_.marginals[v], u[v]);
        return out;
    }
    std::vector<double> z(d);
    for (int v = 0; v < d; ++v) z[v] = std_normal_inv_cdf(u[v]);
    for (int v = 0; v < d; ++v) {
        double acc = 0.0;
        for (int k = 0; k <= v; ++k) acc += chol_[static_cast<std::size_t>(v) * d + k] * z[k];
        out[v] = marginal_inv_cdf(model_.marginals[v], std_normal_cdf(acc));
    }
    return out;
}

}  // namespace umaxpro
