#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "umaxpro/design.hpp"
#include "umaxpro/statmodel.hpp"

namespace umaxpro {

enum class TestFunctionKind { product_exp, short_column, cantilever_stress, cantilever_displacement };

struct CantileverConstants {
    double w = 4.0;     // beam width
    double t = 2.0;     // beam thickness
    double length = 100.0;
    double d0 = 2.2535;  // allowed displacement
};

struct ShortColumnConstants {
    double b = 5.0;   // cross-section width
    double h = 15.0;  // cross-section depth
};

double product_exp(std::span<const double> x);
double product_exp_exact_mean(int d);

/// Limit-state of the short column; y > 0 required.
double short_column(double y, double m, double p, const ShortColumnConstants& c = {});

double cantilever_stress(double x, double y, const CantileverConstants& c = {});
double cantilever_displacement(double e, double x, double y, const CantileverConstants& c = {});

/// Table-driven input models for the engineering benchmarks. The short
/// column model carries the 0.5 Gaussian-copula correlation between the
/// moment and axial force; the cantilever inputs are independent.
InputModel short_column_inputs();
InputModel cantilever_inputs();

/// A benchmark integrand bound to a test function: maps one unit-cube row
/// (already restricted to the active dimensions) to a response value.
/// product_exp uses independent standard normal inputs; the engineering
/// functions push rows through their input-model copula.
class Integrand {
public:
    Integrand(TestFunctionKind kind, int active_dims);
    Integrand(TestFunctionKind kind, int active_dims, CantileverConstants constants);

    double operator()(std::span<const double> u) const;
    int active_dims() const { return active_dims_; }
    TestFunctionKind kind() const { return kind_; }
    /// Exact integral when known in closed form (product_exp only).
    std::optional<double> exact_mean() const;

private:
    TestFunctionKind kind_;
    int active_dims_;
    CantileverConstants cantilever_{};
    ShortColumnConstants column_{};
    std::optional<CopulaTransform> transform_;
};

/// Equal-weight Monte Carlo average of the integrand over the design,
/// restricted to the selected active columns.
double mc_mean(const Design& points, const SubspaceSelector& active, const Integrand& f);

double rmse_over_runs(std::span<const double> estimates, double exact);

struct BenchmarkRecord {
    std::string method;
    int n_sim = 0;
    int n_run = 0;
    std::vector<double> estimates;
    double mean = 0.0;
    double stddev = 0.0;
    double rmse = 0.0;
    std::optional<double> exact;
    std::optional<SubspaceSelector> subspace;
    std::vector<std::uint64_t> seeds;
};

BenchmarkRecord summarize_runs(std::string method, int n_sim, std::vector<double> estimates,
                               std::optional<double> exact,
                               std::vector<std::uint64_t> seeds = {});

/// All C(parent_dim, sub_dim) strictly increasing selectors, lexicographic.
std::vector<SubspaceSelector> all_subspaces(int parent_dim, int sub_dim);

/// Projects every design onto every sub_dim-subspace and evaluates the
/// integrand there; one record per subspace, estimates indexed by run.
std::vector<BenchmarkRecord> subspace_benchmark(const std::vector<Design>& designs,
                                                const std::string& method, int sub_dim,
                                                const Integrand& f);

}  // namespace umaxpro
