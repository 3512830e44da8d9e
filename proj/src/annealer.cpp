#include "umaxpro/annealer.hpp"

#include <cmath>
#include <stdexcept>

#include "umaxpro/rng.hpp"

namespace umaxpro {

namespace {
constexpr double kImprovementEps = 1e-12;

bool improves(double cand, double cur) {
    return cand < cur - kImprovementEps * std::max(1.0, std::abs(cur));
}
}  // namespace

void Schedule::validate() const {
    if (!(cooling_ratio > 0.0 && cooling_ratio < 1.0))
        throw DesignError("cooling ratio must lie in (0,1)");
    if (t_init && *t_init <= 0.0) throw DesignError("t_init must be positive");
    if (t_min && *t_min <= 0.0) throw DesignError("t_min must be positive");
    if (t_init && t_min && *t_min >= *t_init)
        throw DesignError("degenerate schedule: t_min >= t_init");
    if (moves_per_temperature < 0) throw DesignError("moves_per_temperature must be positive");
    if (stall_limit < 1) throw DesignError("stall_limit must be >= 1");
}

double auto_initial_temperature(const LhsDesign& initial, const CriterionSpec& spec,
                                std::uint64_t seed) {
    CriterionState state(initial, spec);
    const double cur = state.cost();
    Rng rng(seed);
    double pos_sum = 0.0;
    int pos_count = 0;
    for (int k = 0; k < 200; ++k) {
        int v = rng.uniform_int(initial.n_var);
        auto [a, b] = rng.distinct_pair(initial.n_sim);
        double cand = state.swap_cost(v, a, b);
        double d = cand - cur;
        if (std::isfinite(d) && d > 0.0) {
            pos_sum += d;
            ++pos_count;
        }
    }
    if (pos_count == 0) return std::max(std::abs(cur) * 0.01, 1e-12);
    // mean uphill delta / ln(1/0.8) gives ~0.8 mean uphill acceptance at T0
    return (pos_sum / pos_count) / std::log(1.0 / 0.8);
}

OptResult optimize(const LhsDesign& initial, const CriterionSpec& spec, const Schedule& sched,
                   std::uint64_t seed) {
    sched.validate();
    CriterionState state(initial, spec);
    double cur = state.cost();
    if (!std::isfinite(cur))
        throw DesignError("criterion is not finite on the initial design");

    const int n = initial.n_sim;
    const int d = initial.n_var;
    const int moves = sched.resolved_moves(n, d);

    double t0 = sched.t_init ? *sched.t_init
                             : auto_initial_temperature(initial, spec, seed ^ 0xa5a5a5a5ULL);
    double t_min = sched.t_min ? *sched.t_min : 1e-6 * t0;
    if (t_min >= t0) throw DesignError("degenerate schedule: t_min >= t_init");

    OptResult res;
    res.seed = seed;
    res.t_init_used = t0;
    res.best = state.lhs();
    double best_cost = cur;

    Rng rng(seed);
    int stall = 0;
    for (double T = t0; T >= t_min; T *= sched.cooling_ratio) {
        bool improved = false;
        for (int m = 0; m < moves; ++m) {
            int v = rng.uniform_int(d);
            auto [a, b] = rng.distinct_pair(n);
            double cand = state.swap_cost(v, a, b);
            double dobj = cand - cur;
            bool accept;
            if (!std::isfinite(cand)) {
                accept = false;
            } else if (dobj <= 0.0) {
                accept = true;
            } else {
                accept = rng.uniform01() < std::exp(-dobj / T);
            }
            if (accept) {
                state.commit_swap(v, a, b);
                cur = state.cost();
                ++res.accepted;
                if (cur < best_cost) {
                    best_cost = cur;
                    res.best = state.lhs();
                    improved = true;
                }
            } else {
                ++res.rejected;
            }
        }
        res.history.push_back({T, cur, best_cost});
        stall = improved ? 0 : stall + 1;
        if (stall >= sched.stall_limit) break;
    }

    res.best = greedy_polish(res.best, spec, &res.polish_swaps);
    res.best_value = criterion_cost(realize(res.best), spec);
    res.history.push_back({0.0, res.best_value, std::min(best_cost, res.best_value)});
    return res;
}

LhsDesign greedy_polish(const LhsDesign& design, const CriterionSpec& spec, long* swaps_out) {
    CriterionState state(design, spec);
    double cur = state.cost();
    long swaps = 0;
    const int n = design.n_sim;
    const int d = design.n_var;
    bool improved = true;
    const long sweep_cap = 100000;
    long sweeps = 0;
    while (improved && sweeps++ < sweep_cap) {
        improved = false;
        for (int v = 0; v < d; ++v) {
            for (int a = 0; a < n - 1; ++a) {
                for (int b = a + 1; b < n; ++b) {
                    double cand = state.swap_cost(v, a, b);
                    if (improves(cand, cur)) {
                        state.commit_swap(v, a, b);
                        cur = state.cost();
                        ++swaps;
                        improved = true;
                    }
                }
            }
        }
    }
    if (swaps_out) *swaps_out = swaps;
    return state.lhs();
}

}  // namespace umaxpro
