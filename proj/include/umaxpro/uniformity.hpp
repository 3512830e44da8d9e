#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "umaxpro/design.hpp"

namespace umaxpro {

/// LH-bin occupancy pooled over repeated designs, with relative frequencies
/// normalized so that a statistically uniform mechanism gives f = 1 per bin.
struct BinHistogram {
    std::vector<int> dims;        // retained dimensions
    int n_levels = 0;             // bins per retained dimension (= n_sim)
    std::vector<long> counts;     // flattened, first retained dim fastest
    std::vector<double> relative;
    long n_run = 0;
    long total = 0;
    double chi_square = 0.0;      // vs the flat null
    double p_value = 1.0;
    int df = 0;
};

struct RadialProfile {
    std::vector<double> layer_edges;     // n_layers + 1 radii from the center
    std::vector<long> counts;            // pooled per layer
    std::vector<double> shell_volumes;   // hypercube volume fraction per layer
    std::vector<double> density_ratio;   // (count share) / (volume share)
    double delta = 0.0;                  // volume-weighted undersampling deficit
};

BinHistogram bin_histogram(const std::vector<Design>& designs,
                           const std::optional<SubspaceSelector>& sel = std::nullopt);

/// QMC estimate of the hypercube volume fraction with center distance in
/// each [edges[k], edges[k+1]). The last edge must reach the half-diagonal.
std::vector<double> shell_volumes(int d, const std::vector<double>& edges, long n_mc,
                                  std::uint64_t seed);

RadialProfile radial_profile(const std::vector<Design>& designs, int n_layers, long n_mc,
                             std::uint64_t seed);

}  // namespace umaxpro
