#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace umaxpro {

class DesignError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dense N_sim x N_var point set in the unit hypercube [0,1)^d, row-major.
struct Design {
    int n_sim = 0;
    int n_var = 0;
    std::vector<double> pts;

    Design() = default;
    Design(int n, int d) : n_sim(n), n_var(d), pts(static_cast<std::size_t>(n) * d, 0.0) {
        if (n < 1 || d < 1) throw DesignError("Design requires n_sim >= 1 and n_var >= 1");
    }

    double& at(int s, int v) { return pts[static_cast<std::size_t>(s) * n_var + v]; }
    double at(int s, int v) const { return pts[static_cast<std::size_t>(s) * n_var + v]; }
    const double* row(int s) const { return pts.data() + static_cast<std::size_t>(s) * n_var; }
};

enum class Placement { median, random };

/// Latin hypercube design in level form: one permutation of {1..n_sim} per
/// dimension. Swap moves operate on integer levels so coordinates never
/// accumulate floating-point drift.
struct LhsDesign {
    int n_sim = 0;
    int n_var = 0;
    std::vector<int> levels;  // column-major: levels[v * n_sim + s] in 1..n_sim
    Placement placement = Placement::median;
    std::vector<double> offsets;  // row-major (0,1) offsets, random placement only

    LhsDesign() = default;
    LhsDesign(int n, int d)
        : n_sim(n), n_var(d), levels(static_cast<std::size_t>(n) * d, 0) {
        if (n < 2 || d < 1) throw DesignError("LhsDesign requires n_sim >= 2 and n_var >= 1");
    }

    int level(int s, int v) const { return levels[static_cast<std::size_t>(v) * n_sim + s]; }
    int& level(int s, int v) { return levels[static_cast<std::size_t>(v) * n_sim + s]; }
};

struct SubspaceSelector {
    std::vector<int> dims;  // strictly increasing column indices
};

/// Per-dimension Latin hypercube diagnostics.
struct LhsDiagnostics {
    bool all_pass = true;
    std::vector<bool> dim_pass;
    std::vector<std::vector<int>> offending_rows;  // rows in over-occupied strata
};

/// Realized coordinate of level `lv` (1-based) out of `n` under median placement.
inline double median_coordinate(int lv, int n) {
    return (lv - 0.5) / n;
}

/// Fractional part mapped to [0,1); exact 1.0 folds to 0.0.
inline double wrap01(double x) {
    double f = x - static_cast<long long>(x);
    if (f < 0.0) f += 1.0;
    if (f >= 1.0) f = 0.0;
    return f;
}

Design realize(const LhsDesign& lhs);
LhsDiagnostics validate_lhs(const Design& design, int n_levels);
Design project(const Design& design, const SubspaceSelector& sel);
LhsDesign project(const LhsDesign& lhs, const SubspaceSelector& sel);
Design translate_mod1(const Design& design, const std::vector<double>& shift);

void check_selector(const SubspaceSelector& sel, int n_var);

}  // namespace umaxpro
