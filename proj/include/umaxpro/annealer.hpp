#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "umaxpro/criteria.hpp"
#include "umaxpro/design.hpp"

namespace umaxpro {

struct Schedule {
    std::optional<double> t_init;        // unset = calibrated from sampled swap deltas
    double cooling_ratio = 0.95;         // in (0,1)
    int moves_per_temperature = 0;       // 0 = 20 * n_sim * n_var
    std::optional<double> t_min;         // unset = 1e-6 * t_init
    int stall_limit = 30;                // temperature steps without improvement

    void validate() const;
    int resolved_moves(int n_sim, int n_var) const {
        return moves_per_temperature > 0 ? moves_per_temperature : 20 * n_sim * n_var;
    }
};

struct HistoryPoint {
    double temperature;
    double current;
    double best;
};

struct OptResult {
    LhsDesign best;
    double best_value = 0.0;  // minimize-sense cost of `best`
    std::vector<HistoryPoint> history;
    long accepted = 0;
    long rejected = 0;
    std::uint64_t seed = 0;
    long polish_swaps = 0;
    double t_init_used = 0.0;
};

/// Simulated annealing over LHS level-swap moves, followed by a greedy
/// polish of the best design encountered. Deterministic in
/// (initial, spec, sched, seed).
OptResult optimize(const LhsDesign& initial, const CriterionSpec& spec, const Schedule& sched,
                   std::uint64_t seed);

/// Repeated sweeps of all single swaps, applying strict improvements, until
/// no swap improves the objective.
LhsDesign greedy_polish(const LhsDesign& design, const CriterionSpec& spec,
                        long* swaps_out = nullptr);

/// T0 targeting ~0.8 mean acceptance of uphill moves over 200 sampled swaps.
double auto_initial_temperature(const LhsDesign& initial, const CriterionSpec& spec,
                                std::uint64_t seed);

}  // namespace umaxpro
