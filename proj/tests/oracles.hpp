#pragma once

// Naive, loop-by-the-formula reimplementations used as independent oracles.
// Deliberately kept free of any umaxpro/criteria.hpp machinery beyond the
// Design container.

#include <cmath>
#include <limits>
#include <vector>

#include "umaxpro/design.hpp"

namespace oracle {

inline double proj(const umaxpro::Design& d, int i, int j, int v, bool periodic) {
    double dl = std::fabs(d.at(i, v) - d.at(j, v));
    if (periodic && dl > 1.0 - dl) dl = 1.0 - dl;
    return dl;
}

inline double maxpro(const umaxpro::Design& d, bool periodic) {
    int n = d.n_sim;
    double sum = 0.0;
    for (int i = 0; i < n - 1; ++i)
        for (int j = i + 1; j < n; ++j) {
            double prod = 1.0;
            for (int v = 0; v < d.n_var; ++v) {
                double dl = proj(d, i, j, v, periodic);
                prod *= dl * dl;
            }
            if (prod == 0.0) return std::numeric_limits<double>::infinity();
            sum += 1.0 / prod;
        }
    double pairs = n * (n - 1) / 2.0;
    return std::pow(sum / pairs, 1.0 / d.n_var);
}

inline double morris_mitchell(const umaxpro::Design& d, double k, bool periodic) {
    int n = d.n_sim;
    double sum = 0.0;
    for (int i = 0; i < n - 1; ++i)
        for (int j = i + 1; j < n; ++j) {
            double dist2 = 0.0;
            for (int v = 0; v < d.n_var; ++v) {
                double dl = proj(d, i, j, v, periodic);
                dist2 += dl * dl;
            }
            if (dist2 == 0.0) return std::numeric_limits<double>::infinity();
            sum += 1.0 / std::pow(std::sqrt(dist2), k);
        }
    double pairs = n * (n - 1) / 2.0;
    return std::pow(sum / pairs, 1.0 / k);
}

inline double maximin(const umaxpro::Design& d, bool periodic) {
    int n = d.n_sim;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n - 1; ++i)
        for (int j = i + 1; j < n; ++j) {
            double dist2 = 0.0;
            for (int v = 0; v < d.n_var; ++v) {
                double dl = proj(d, i, j, v, periodic);
                dist2 += dl * dl;
            }
            double dist = std::sqrt(dist2);
            if (dist < best) best = dist;
        }
    return best;
}

// Triple loop straight from the defining expression.
inline double wd2_squared(const umaxpro::Design& d) {
    int n = d.n_sim;
    int nv = d.n_var;
    double sum = 0.0;
    for (int i = 0; i < n - 1; ++i)
        for (int j = i + 1; j < n; ++j) {
            double prod = 1.0;
            for (int v = 0; v < nv; ++v) {
                double dl = std::fabs(d.at(i, v) - d.at(j, v));
                prod *= 1.5 - dl * (1.0 - dl);
            }
            sum += prod;
        }
    return -std::pow(4.0 / 3.0, nv) + std::pow(1.5, nv) / n + 2.0 / (double(n) * n) * sum;
}

inline double rmse(const std::vector<double>& est, double exact) {
    double acc = 0.0;
    for (double e : est) acc += (e - exact) * (e - exact);
    return std::sqrt(acc / est.size());
}

}  // namespace oracle
