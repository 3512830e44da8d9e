#pragma once

#include "umaxpro/design.hpp"

namespace umaxpro {

struct Wd2Report {
    double wd2_squared = 0.0;
    double wd2 = 0.0;
    int n_sim = 0;
    int n_var = 0;
};

/// Squared wrap-around L2 discrepancy. Invariant under row and dimension
/// permutation, reflection x -> 1-x, and mod-1 translation.
double wd2_squared(const Design& design);

Wd2Report wd2_report(const Design& design);

}  // namespace umaxpro
