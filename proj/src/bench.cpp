#include "umaxpro/bench.hpp"

#include <cmath>

namespace umaxpro {

double product_exp(std::span<const double> x) {
    double prod = 1.0;
    for (double xv : x) prod *= std::exp(-xv * xv);
    return prod;
}

double product_exp_exact_mean(int d) {
    if (d < 1) throw DesignError("product_exp_exact_mean: d must be >= 1");
    return std::pow(3.0, -0.5 * d);
}

double short_column(double y, double m, double p, const ShortColumnConstants& c) {
    if (!(y > 0.0)) throw DesignError("short_column: yield stress must be positive");
    double bh2y = c.b * c.h * c.h * y;
    return 1.0 - 4.0 * m / bh2y - p * p / (bh2y * c.b * y);
}

double cantilever_stress(double x, double y, const CantileverConstants& c) {
    if (!(c.w > 0.0 && c.t > 0.0)) throw DesignError("cantilever: non-positive geometry");
    return 600.0 * y / (c.w * c.t * c.t) + 600.0 * x / (c.w * c.w * c.t);
}

double cantilever_displacement(double e, double x, double y, const CantileverConstants& c) {
    if (!(e > 0.0 && c.w > 0.0 && c.t > 0.0 && c.length > 0.0))
        throw DesignError("cantilever: non-positive geometry");
    double a = y / (c.t * c.t);
    double b = x / (c.w * c.w);
    return 4.0 * c.length * c.length * c.length / (e * c.w * c.t) * std::sqrt(a * a + b * b);
}

InputModel short_column_inputs() {
    InputModel model;
    model.marginals = {{MarginalKind::lognormal, 5.0, 0.5},
                       {MarginalKind::normal, 2000.0, 400.0},
                       {MarginalKind::normal, 500.0, 100.0}};
    // 0.5 correlation between moment and axial force at the Gaussian layer
    model.correlation = {1.0, 0.0, 0.0,
                         0.0, 1.0, 0.5,
                         0.0, 0.5, 1.0};
    return model;
}

InputModel cantilever_inputs() {
    return InputModel::independent({{MarginalKind::normal, 40000.0, 2000.0},
                                    {MarginalKind::normal, 2.9e7, 1.45e6},
                                    {MarginalKind::normal, 500.0, 100.0},
                                    {MarginalKind::normal, 1000.0, 100.0}});
}

Integrand::Integrand(TestFunctionKind kind, int active_dims)
    : kind_(kind), active_dims_(active_dims) {
    switch (kind_) {
        case TestFunctionKind::product_exp:
            if (active_dims_ < 1) throw DesignError("product_exp needs at least one dimension");
            break;
        case TestFunctionKind::short_column:
            if (active_dims_ != 3) throw DesignError("short_column has 3 active dimensions");
            transform_.emplace(short_column_inputs());
            break;
        case TestFunctionKind::cantilever_stress:
        case TestFunctionKind::cantilever_displacement:
            if (active_dims_ != 4) throw DesignError("cantilever has 4 active dimensions");
            transform_.emplace(cantilever_inputs());
            break;
    }
}

Integrand::Integrand(TestFunctionKind kind, int active_dims, CantileverConstants constants)
    : Integrand(kind, active_dims) {
    cantilever_ = constants;
}

double Integrand::operator()(std::span<const double> u) const {
    if (u.size() != static_cast<std::size_t>(active_dims_))
        throw DesignError("integrand row length mismatch");
    switch (kind_) {
        case TestFunctionKind::product_exp: {
            double prod = 1.0;
            for (double uv : u) {
                double z = std_normal_inv_cdf(uv);
                prod *= std::exp(-z * z);
            }
            return prod;
        }
        case TestFunctionKind::short_column: {
            auto phys = (*transform_)(u);
            return short_column(phys[0], phys[1], phys[2], column_);
        }
        case TestFunctionKind::cantilever_stress: {
            auto phys = (*transform_)(u);  // (r, e, x, y)
            return cantilever_stress(phys[2], phys[3], cantilever_);
        }
        case TestFunctionKind::cantilever_displacement: {
            auto phys = (*transform_)(u);
            return cantilever_displacement(phys[1], phys[2], phys[3], cantilever_);
        }
    }
    throw DesignError("unknown test function");
}

std::optional<double> Integrand::exact_mean() const {
    if (kind_ == TestFunctionKind::product_exp) return product_exp_exact_mean(active_dims_);
    return std::nullopt;
}

double mc_mean(const Design& points, const SubspaceSelector& active, const Integrand& f) {
    check_selector(active, points.n_var);
    if (static_cast<int>(active.dims.size()) != f.active_dims())
        throw DesignError("active selector does not match the test function dimensions");
    std::vector<double> row(active.dims.size());
    double sum = 0.0;
    for (int s = 0; s < points.n_sim; ++s) {
        for (std::size_t k = 0; k < active.dims.size(); ++k) row[k] = points.at(s, active.dims[k]);
        sum += f(row);
    }
    return sum / points.n_sim;
}

double rmse_over_runs(std::span<const double> estimates, double exact) {
    if (estimates.empty()) throw DesignError("rmse_over_runs: no estimates");
    double acc = 0.0;
    for (double e : estimates) {
        double dev = e - exact;
        acc += dev * dev;
    }
    return std::sqrt(acc / static_cast<double>(estimates.size()));
}

BenchmarkRecord summarize_runs(std::string method, int n_sim, std::vector<double> estimates,
                               std::optional<double> exact, std::vector<std::uint64_t> seeds) {
    if (estimates.empty()) throw DesignError("summarize_runs: no estimates");
    BenchmarkRecord rec;
    rec.method = std::move(method);
    rec.n_sim = n_sim;
    rec.n_run = static_cast<int>(estimates.size());
    rec.estimates = std::move(estimates);
    rec.seeds = std::move(seeds);
    double mean = 0.0;
    for (double e : rec.estimates) mean += e;
    mean /= rec.n_run;
    rec.mean = mean;
    double var = 0.0;
    for (double e : rec.estimates) var += (e - mean) * (e - mean);
    rec.stddev = rec.n_run > 1 ? std::sqrt(var / (rec.n_run - 1)) : 0.0;
    rec.exact = exact;
    rec.rmse = exact ? rmse_over_runs(rec.estimates, *exact) : 0.0;
    return rec;
}

std::vector<SubspaceSelector> all_subspaces(int parent_dim, int sub_dim) {
    if (sub_dim < 1 || sub_dim > parent_dim)
        throw DesignError("all_subspaces: require 1 <= sub_dim <= parent_dim");
    std::vector<SubspaceSelector> out;
    std::vector<int> idx(sub_dim);
    for (int k = 0; k < sub_dim; ++k) idx[k] = k;
    while (true) {
        out.push_back({idx});
        int k = sub_dim - 1;
        while (k >= 0 && idx[k] == parent_dim - sub_dim + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int j = k + 1; j < sub_dim; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

std::vector<BenchmarkRecord> subspace_benchmark(const std::vector<Design>& designs,
                                                const std::string& method, int sub_dim,
                                                const Integrand& f) {
    if (designs.empty()) throw DesignError("subspace_benchmark: no designs");
    const int parent = designs.front().n_var;
    std::vector<BenchmarkRecord> records;
    for (const auto& sel : all_subspaces(parent, sub_dim)) {
        std::vector<double> estimates;
        estimates.reserve(designs.size());
        for (const auto& dsg : designs) estimates.push_back(mc_mean(dsg, sel, f));
        auto rec = summarize_runs(method, designs.front().n_sim, std::move(estimates),
                                  f.exact_mean());
        rec.subspace = sel;
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace umaxpro
