#include "umaxpro/criteria.hpp"

#include <algorithm>
#include <cmath>

namespace umaxpro {

namespace {

inline double proj_delta(double xi, double xj, MetricKind metric) {
    double d = std::abs(xi - xj);
    return metric == MetricKind::periodic ? periodic_delta(d) : d;
}

Objective maxpro_family_value(const Design& design, MetricKind metric) {
    const int n = design.n_sim;
    const int d = design.n_var;
    if (n < 2) throw DesignError("criterion requires n_sim >= 2");
    double sum = 0.0;
    for (int i = 0; i < n - 1; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double prod = 1.0;
            for (int v = 0; v < d; ++v) {
                double dl = proj_delta(design.at(i, v), design.at(j, v), metric);
                prod *= dl * dl;
            }
            if (prod == 0.0) return Objective::infinite(i, j);
            sum += 1.0 / prod;
        }
    }
    double pairs = 0.5 * n * (n - 1);
    return {std::pow(sum / pairs, 1.0 / d), true, -1, -1};
}

}  // namespace

Objective maxpro_value(const Design& design) {
    return maxpro_family_value(design, MetricKind::intersite);
}

Objective umaxpro_value(const Design& design) {
    return maxpro_family_value(design, MetricKind::periodic);
}

Objective morris_mitchell_value(const Design& design, double k, MetricKind metric) {
    const int n = design.n_sim;
    const int d = design.n_var;
    if (n < 2) throw DesignError("criterion requires n_sim >= 2");
    if (k < 1.0) throw DesignError("Morris-Mitchell exponent must be >= 1");
    double sum = 0.0;
    for (int i = 0; i < n - 1; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double dist2 = 0.0;
            for (int v = 0; v < d; ++v) {
                double dl = proj_delta(design.at(i, v), design.at(j, v), metric);
                dist2 += dl * dl;
            }
            if (dist2 == 0.0) return Objective::infinite(i, j);
            sum += std::pow(dist2, -0.5 * k);
        }
    }
    double pairs = 0.5 * n * (n - 1);
    return {std::pow(sum / pairs, 1.0 / k), true, -1, -1};
}

double maximin_value(const Design& design, MetricKind metric) {
    const int n = design.n_sim;
    const int d = design.n_var;
    if (n < 2) throw DesignError("criterion requires n_sim >= 2");
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n - 1; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double dist2 = 0.0;
            for (int v = 0; v < d; ++v) {
                double dl = proj_delta(design.at(i, v), design.at(j, v), metric);
                dist2 += dl * dl;
            }
            best = std::min(best, dist2);
        }
    }
    return std::sqrt(best);
}

double criterion_cost(const Design& design, const CriterionSpec& spec) {
    switch (spec.kind) {
        case CriterionKind::maxpro: return maxpro_value(design).value;
        case CriterionKind::umaxpro: return umaxpro_value(design).value;
        case CriterionKind::morris_mitchell:
            return morris_mitchell_value(design, spec.k_exponent, spec.effective_metric()).value;
        case CriterionKind::maximin: return -maximin_value(design, spec.effective_metric());
        case CriterionKind::periodic_maximin:
            return -maximin_value(design, MetricKind::periodic);
    }
    throw DesignError("unknown criterion kind");
}

std::string criterion_name(CriterionKind kind) {
    switch (kind) {
        case CriterionKind::maxpro: return "maxpro";
        case CriterionKind::umaxpro: return "umaxpro";
        case CriterionKind::morris_mitchell: return "mm";
        case CriterionKind::maximin: return "maximin";
        case CriterionKind::periodic_maximin: return "pmaximin";
    }
    return "unknown";
}

std::string metric_name(MetricKind metric) {
    return metric == MetricKind::periodic ? "periodic" : "intersite";
}

CriterionState::CriterionState(const LhsDesign& lhs, const CriterionSpec& spec)
    : spec_(spec), lhs_(lhs), n_(lhs.n_sim), d_(lhs.n_var) {
    Design real = realize(lhs_);
    coords_.resize(static_cast<std::size_t>(n_) * d_);
    for (int v = 0; v < d_; ++v)
        for (int s = 0; s < n_; ++s)
            coords_[static_cast<std::size_t>(v) * n_ + s] = real.at(s, v);
    terms_.resize(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
    refresh();
}

double CriterionState::pair_term(int i, int j) const {
    const MetricKind metric = spec_.effective_metric();
    switch (spec_.kind) {
        case CriterionKind::maxpro:
        case CriterionKind::umaxpro: {
            double prod = 1.0;
            for (int v = 0; v < d_; ++v) {
                double dl = proj_delta(coord(i, v), coord(j, v), metric);
                prod *= dl * dl;
            }
            return prod == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / prod;
        }
        case CriterionKind::morris_mitchell: {
            double dist2 = 0.0;
            for (int v = 0; v < d_; ++v) {
                double dl = proj_delta(coord(i, v), coord(j, v), metric);
                dist2 += dl * dl;
            }
            return dist2 == 0.0 ? std::numeric_limits<double>::infinity()
                                : std::pow(dist2, -0.5 * spec_.k_exponent);
        }
        case CriterionKind::maximin:
        case CriterionKind::periodic_maximin: {
            double dist2 = 0.0;
            for (int v = 0; v < d_; ++v) {
                double dl = proj_delta(coord(i, v), coord(j, v), metric);
                dist2 += dl * dl;
            }
            return dist2;
        }
    }
    throw DesignError("unknown criterion kind");
}

double CriterionState::pair_term_swapped(int i, int j, int dim, int a, int b) const {
    const MetricKind metric = spec_.effective_metric();
    auto coord_after = [&](int s, int v) {
        if (v != dim) return coord(s, v);
        if (s == a) return coord(b, v);
        if (s == b) return coord(a, v);
        return coord(s, v);
    };
    switch (spec_.kind) {
        case CriterionKind::maxpro:
        case CriterionKind::umaxpro: {
            double prod = 1.0;
            for (int v = 0; v < d_; ++v) {
                double dl = proj_delta(coord_after(i, v), coord_after(j, v), metric);
                prod *= dl * dl;
            }
            return prod == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / prod;
        }
        case CriterionKind::morris_mitchell: {
            double dist2 = 0.0;
            for (int v = 0; v < d_; ++v) {
                double dl = proj_delta(coord_after(i, v), coord_after(j, v), metric);
                dist2 += dl * dl;
            }
            return dist2 == 0.0 ? std::numeric_limits<double>::infinity()
                                : std::pow(dist2, -0.5 * spec_.k_exponent);
        }
        case CriterionKind::maximin:
        case CriterionKind::periodic_maximin: {
            double dist2 = 0.0;
            for (int v = 0; v < d_; ++v) {
                double dl = proj_delta(coord_after(i, v), coord_after(j, v), metric);
                dist2 += dl * dl;
            }
            return dist2;
        }
    }
    throw DesignError("unknown criterion kind");
}

double CriterionState::cost_from_sum(double sum, long inf_count) const {
    if (inf_count > 0) return std::numeric_limits<double>::infinity();
    double pairs = 0.5 * n_ * (n_ - 1);
    if (spec_.kind == CriterionKind::morris_mitchell)
        return std::pow(sum / pairs, 1.0 / spec_.k_exponent);
    return std::pow(sum / pairs, 1.0 / d_);
}

void CriterionState::refresh() {
    sum_ = 0.0;
    inf_count_ = 0;
    inf_i_ = inf_j_ = -1;
    std::size_t idx = 0;
    for (int i = 0; i < n_ - 1; ++i) {
        for (int j = i + 1; j < n_; ++j, ++idx) {
            double t = pair_term(i, j);
            terms_[idx] = t;
            if (std::isinf(t)) {
                if (inf_count_ == 0) {
                    inf_i_ = i;
                    inf_j_ = j;
                }
                ++inf_count_;
            } else {
                sum_ += t;
            }
        }
    }
}

double CriterionState::cost() const {
    if (spec_.maximize_sense()) {
        double m = *std::min_element(terms_.begin(), terms_.end());
        return -std::sqrt(m);
    }
    return cost_from_sum(sum_, inf_count_);
}

Objective CriterionState::objective() const {
    if (spec_.maximize_sense()) {
        double m = *std::min_element(terms_.begin(), terms_.end());
        return {std::sqrt(m), true, -1, -1};
    }
    if (inf_count_ > 0) return Objective::infinite(inf_i_, inf_j_);
    return {cost_from_sum(sum_, 0), true, -1, -1};
}

double CriterionState::swap_cost(int dim, int a, int b) const {
    if (a == b) throw DesignError("swap rows must differ");
    if (a > b) std::swap(a, b);
    if (spec_.maximize_sense()) {
        // Minimum over pairs with the affected distances replaced.
        double m = std::numeric_limits<double>::infinity();
        std::size_t idx = 0;
        for (int i = 0; i < n_ - 1; ++i) {
            for (int j = i + 1; j < n_; ++j, ++idx) {
                bool touched = (i == a || i == b || j == a || j == b) && !(i == a && j == b);
                double t = touched ? pair_term_swapped(i, j, dim, a, b) : terms_[idx];
                m = std::min(m, t);
            }
        }
        return -std::sqrt(m);
    }
    double sum = sum_;
    long infc = inf_count_;
    for (int k = 0; k < n_; ++k) {
        if (k == a || k == b) continue;
        for (int r : {a, b}) {
            int i = std::min(r, k), j = std::max(r, k);
            double told = terms_[pair_index(i, j)];
            double tnew = pair_term_swapped(i, j, dim, a, b);
            if (std::isinf(told)) --infc; else sum -= told;
            if (std::isinf(tnew)) ++infc; else sum += tnew;
        }
    }
    return cost_from_sum(sum, infc);
}

void CriterionState::commit_swap(int dim, int a, int b) {
    if (a == b) throw DesignError("swap rows must differ");
    if (a > b) std::swap(a, b);
    for (int k = 0; k < n_; ++k) {
        if (k == a || k == b) continue;
        for (int r : {a, b}) {
            int i = std::min(r, k), j = std::max(r, k);
            std::size_t idx = pair_index(i, j);
            double told = terms_[idx];
            double tnew = pair_term_swapped(i, j, dim, a, b);
            if (std::isinf(told)) --inf_count_; else sum_ -= told;
            if (std::isinf(tnew)) ++inf_count_; else sum_ += tnew;
            terms_[idx] = tnew;
        }
    }
    std::swap(coords_[static_cast<std::size_t>(dim) * n_ + a],
              coords_[static_cast<std::size_t>(dim) * n_ + b]);
    std::swap(lhs_.level(a, dim), lhs_.level(b, dim));
    if (lhs_.placement == Placement::random && !lhs_.offsets.empty())
        std::swap(lhs_.offsets[static_cast<std::size_t>(a) * d_ + dim],
                  lhs_.offsets[static_cast<std::size_t>(b) * d_ + dim]);
    ++committed_;
    // Bound floating-point drift in the running sum. Also re-locate the
    // offending pair whenever any term is infinite (unreachable for LHS).
    if (committed_ % (10L * n_) == 0 || inf_count_ != 0) refresh();
}

Design CriterionState::realized() const {
    Design out(n_, d_);
    for (int v = 0; v < d_; ++v)
        for (int s = 0; s < n_; ++s)
            out.at(s, v) = coord(s, v);
    return out;
}

}  // namespace umaxpro
