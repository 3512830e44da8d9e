#include "umaxpro/discrepancy.hpp"

#include <cmath>

namespace umaxpro {

double wd2_squared(const Design& design) {
    const int n = design.n_sim;
    const int d = design.n_var;
    if (n < 1) throw DesignError("wd2 requires n_sim >= 1");
    double pair_sum = 0.0;
    for (int i = 0; i < n - 1; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double prod = 1.0;
            for (int v = 0; v < d; ++v) {
                double dl = std::abs(design.at(i, v) - design.at(j, v));
                prod *= 1.5 - dl * (1.0 - dl);
            }
            pair_sum += prod;
        }
    }
    const double nn = static_cast<double>(n);
    return -std::pow(4.0 / 3.0, d) + std::pow(1.5, d) / nn + 2.0 * pair_sum / (nn * nn);
}

Wd2Report wd2_report(const Design& design) {
    Wd2Report rep;
    rep.n_sim = design.n_sim;
    rep.n_var = design.n_var;
    rep.wd2_squared = wd2_squared(design);
    rep.wd2 = std::sqrt(rep.wd2_squared);
    return rep;
}

}  // namespace umaxpro
