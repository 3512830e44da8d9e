#pragma once

#include <span>
#include <vector>

#include "umaxpro/design.hpp"

namespace umaxpro {

enum class MarginalKind { normal, lognormal };

/// Marginal distribution parameterized by mean and standard deviation of
/// the physical variable (lognormal parameters are moment-matched).
struct Marginal {
    MarginalKind kind = MarginalKind::normal;
    double mean = 0.0;
    double std = 1.0;

    void validate() const;
};

/// Marginals plus the correlation matrix of the underlying Gaussian copula.
struct InputModel {
    std::vector<Marginal> marginals;
    std::vector<double> correlation;  // row-major d x d, unit diagonal

    int dim() const { return static_cast<int>(marginals.size()); }
    static InputModel independent(std::vector<Marginal> marginals);
    void validate() const;
};

/// Standard normal CDF, absolute error well below 1e-12.
double std_normal_cdf(double z);

/// Standard normal quantile, absolute error <= 1e-9 for p in [1e-15, 1-1e-15].
/// Throws std::domain_error outside (0,1).
double std_normal_inv_cdf(double p);

double marginal_inv_cdf(const Marginal& m, double p);

/// Lower Cholesky factor of a symmetric positive-definite matrix.
/// Throws DesignError naming the failing pivot for non-PD input.
std::vector<double> cholesky_lower(const std::vector<double>& matrix, int d);

/// Gaussian-copula transform of one unit-cube row to physical inputs:
/// z = Phi^-1(u) componentwise, z' = L z, out_v = F_v^-1(Phi(z'_v)).
class CopulaTransform {
public:
    explicit CopulaTransform(InputModel model);
    std::vector<double> operator()(std::span<const double> u) const;
    const InputModel& model() const { return model_; }

private:
    InputModel model_;
    std::vector<double> chol_;
    bool identity_corr_ = false;
};

}  // namespace umaxpro
