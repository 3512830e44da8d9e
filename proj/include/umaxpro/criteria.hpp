#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "umaxpro/design.hpp"

namespace umaxpro {

enum class MetricKind { intersite, periodic };

enum class CriterionKind { maxpro, umaxpro, morris_mitchell, maximin, periodic_maximin };

struct CriterionSpec {
    CriterionKind kind = CriterionKind::umaxpro;
    double k_exponent = 15.0;          // Morris-Mitchell only
    MetricKind metric = MetricKind::intersite;  // Morris-Mitchell / Maximin families

    static CriterionSpec maxpro() { return {CriterionKind::maxpro, 15.0, MetricKind::intersite}; }
    static CriterionSpec umaxpro() { return {CriterionKind::umaxpro, 15.0, MetricKind::periodic}; }
    static CriterionSpec morris_mitchell(double k, MetricKind m) {
        return {CriterionKind::morris_mitchell, k, m};
    }
    static CriterionSpec maximin(MetricKind m) { return {CriterionKind::maximin, 15.0, m}; }
    static CriterionSpec periodic_maximin() {
        return {CriterionKind::periodic_maximin, 15.0, MetricKind::periodic};
    }

    // maxpro pins intersite, umaxpro and periodic_maximin pin periodic.
    MetricKind effective_metric() const {
        switch (kind) {
            case CriterionKind::maxpro: return MetricKind::intersite;
            case CriterionKind::umaxpro: return MetricKind::periodic;
            case CriterionKind::periodic_maximin: return MetricKind::periodic;
            default: return metric;
        }
    }
    // true for distance criteria that are maximized in their natural sense
    bool maximize_sense() const {
        return kind == CriterionKind::maximin || kind == CriterionKind::periodic_maximin;
    }
};

/// Criterion evaluation outcome. A non-finite value carries the first pair
/// of rows with a coincident projection (MaxPro family) or coincident
/// location (Morris-Mitchell).
struct Objective {
    double value = 0.0;
    bool finite = true;
    int pair_i = -1;
    int pair_j = -1;

    static Objective infinite(int i, int j) {
        return {std::numeric_limits<double>::infinity(), false, i, j};
    }
};

inline double delta(double xi, double xj) { return std::abs(xi - xj); }
inline double periodic_delta(double d) { return d < 0.5 ? d : 1.0 - d; }

Objective maxpro_value(const Design& design);
Objective umaxpro_value(const Design& design);
Objective morris_mitchell_value(const Design& design, double k, MetricKind metric);
double maximin_value(const Design& design, MetricKind metric);

/// Dispatch to the criterion named by `spec`, in minimize sense: Maximin
/// family values are negated so that smaller is always better.
double criterion_cost(const Design& design, const CriterionSpec& spec);

std::string criterion_name(CriterionKind kind);
std::string metric_name(MetricKind metric);

/// Cached per-pair contributions for O(N_sim) objective updates under
/// coordinate-swap moves on the level grid. Single-owner mutable.
class CriterionState {
public:
    CriterionState(const LhsDesign& lhs, const CriterionSpec& spec);

    /// Objective in minimize sense; +inf when any pair term is infinite.
    double cost() const;
    Objective objective() const;

    /// Cost after swapping levels of rows a,b in dimension `dim` (no commit).
    double swap_cost(int dim, int a, int b) const;
    /// Apply the swap, updating only the affected pair terms. A full refresh
    /// runs automatically every 10 * n_sim committed swaps.
    void commit_swap(int dim, int a, int b);
    /// Full recomputation of every cached term and the running sum.
    void refresh();

    const LhsDesign& lhs() const { return lhs_; }
    Design realized() const;
    int n_sim() const { return n_; }
    int n_var() const { return d_; }
    std::size_t term_count() const { return terms_.size(); }
    double term(std::size_t idx) const { return terms_[idx]; }

private:
    std::size_t pair_index(int i, int j) const {  // requires i < j
        return static_cast<std::size_t>(i) * n_ - static_cast<std::size_t>(i) * (i + 1) / 2 +
               (j - i - 1);
    }
    double pair_term(int i, int j) const;
    double pair_term_swapped(int i, int j, int dim, int a, int b) const;
    double cost_from_sum(double sum, long inf_count) const;
    double coord(int s, int v) const { return coords_[static_cast<std::size_t>(v) * n_ + s]; }

    CriterionSpec spec_;
    LhsDesign lhs_;
    std::vector<double> coords_;  // column-major realized coordinates
    int n_ = 0;
    int d_ = 0;
    std::vector<double> terms_;  // pair terms; squared distances for Maximin family
    double sum_ = 0.0;
    long inf_count_ = 0;
    int inf_i_ = -1, inf_j_ = -1;
    long committed_ = 0;
};

}  // namespace umaxpro
