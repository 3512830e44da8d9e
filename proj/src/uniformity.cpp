#include "umaxpro/uniformity.hpp"

#include <algorithm>
#include <cmath>

#include "umaxpro/samplers.hpp"
#include "umaxpro/special.hpp"

namespace umaxpro {

BinHistogram bin_histogram(const std::vector<Design>& designs,
                           const std::optional<SubspaceSelector>& sel) {
    if (designs.empty()) throw DesignError("bin_histogram: no designs");
    const int n = designs.front().n_sim;
    const int d = designs.front().n_var;
    for (const auto& dsg : designs)
        if (dsg.n_sim != n || dsg.n_var != d)
            throw DesignError("bin_histogram: designs must share n_sim and n_var");

    BinHistogram hist;
    if (sel) {
        check_selector(*sel, d);
        hist.dims = sel->dims;
    } else {
        hist.dims.resize(d);
        for (int v = 0; v < d; ++v) hist.dims[v] = v;
    }
    hist.n_levels = n;
    hist.n_run = static_cast<long>(designs.size());

    std::size_t n_bins = 1;
    for (std::size_t k = 0; k < hist.dims.size(); ++k) {
        n_bins *= static_cast<std::size_t>(n);
        if (n_bins > 100'000'000u) throw DesignError("bin_histogram: bin grid too large");
    }
    hist.counts.assign(n_bins, 0);

    for (const auto& dsg : designs) {
        for (int s = 0; s < n; ++s) {
            std::size_t idx = 0;
            std::size_t stride = 1;
            for (int v : hist.dims) {
                int b = static_cast<int>(std::floor(dsg.at(s, v) * n));
                b = std::clamp(b, 0, n - 1);  // x == 1.0 maps to the top bin
                idx += static_cast<std::size_t>(b) * stride;
                stride *= static_cast<std::size_t>(n);
            }
            ++hist.counts[idx];
        }
    }

    hist.total = static_cast<long>(n) * hist.n_run;
    const double f_u = static_cast<double>(hist.total) / static_cast<double>(n_bins);
    hist.relative.resize(n_bins);
    double chi2 = 0.0;
    for (std::size_t b = 0; b < n_bins; ++b) {
        hist.relative[b] = hist.counts[b] / f_u;
        double dev = hist.counts[b] - f_u;
        chi2 += dev * dev / f_u;
    }
    hist.chi_square = chi2;
    hist.df = static_cast<int>(n_bins) - 1;
    hist.p_value = chi_square_sf(chi2, hist.df);
    return hist;
}

std::vector<double> shell_volumes(int d, const std::vector<double>& edges, long n_mc,
                                  std::uint64_t seed) {
    if (d < 1) throw DesignError("shell_volumes: d must be >= 1");
    if (edges.size() < 2) throw DesignError("shell_volumes: need at least two edges");
    for (std::size_t k = 1; k < edges.size(); ++k)
        if (!(edges[k] > edges[k - 1])) throw DesignError("shell_volumes: edges must increase");
    if (edges.back() < 0.5 * std::sqrt(static_cast<double>(d)) - 1e-12)
        throw DesignError("shell_volumes: last edge must reach the half-diagonal");
    if (n_mc < 1) throw DesignError("shell_volumes: n_mc must be positive");

    Design cloud = halton(static_cast<int>(n_mc), d, HaltonSpec{}, seed);
    std::vector<long> counts(edges.size() - 1, 0);
    for (int s = 0; s < cloud.n_sim; ++s) {
        double r2 = 0.0;
        for (int v = 0; v < d; ++v) {
            double dx = cloud.at(s, v) - 0.5;
            r2 += dx * dx;
        }
        double r = std::sqrt(r2);
        auto it = std::upper_bound(edges.begin(), edges.end(), r);
        if (it == edges.begin() || it == edges.end()) continue;
        ++counts[static_cast<std::size_t>(it - edges.begin()) - 1];
    }
    std::vector<double> volumes(counts.size());
    for (std::size_t k = 0; k < counts.size(); ++k)
        volumes[k] = static_cast<double>(counts[k]) / static_cast<double>(n_mc);
    return volumes;
}

RadialProfile radial_profile(const std::vector<Design>& designs, int n_layers, long n_mc,
                             std::uint64_t seed) {
    if (designs.empty()) throw DesignError("radial_profile: no designs");
    if (n_layers < 1) throw DesignError("radial_profile: n_layers must be >= 1");
    const int d = designs.front().n_var;
    for (const auto& dsg : designs)
        if (dsg.n_var != d) throw DesignError("radial_profile: designs must share n_var");

    RadialProfile prof;
    const double r_max = 0.5 * std::sqrt(static_cast<double>(d));
    prof.layer_edges.resize(n_layers + 1);
    for (int k = 0; k <= n_layers; ++k)
        prof.layer_edges[k] = r_max * static_cast<double>(k) / n_layers;

    prof.counts.assign(n_layers, 0);
    long total = 0;
    for (const auto& dsg : designs) {
        for (int s = 0; s < dsg.n_sim; ++s) {
            double r2 = 0.0;
            for (int v = 0; v < d; ++v) {
                double dx = dsg.at(s, v) - 0.5;
                r2 += dx * dx;
            }
            double r = std::sqrt(r2);
            int k = static_cast<int>(std::floor(r / r_max * n_layers));
            k = std::clamp(k, 0, n_layers - 1);
            ++prof.counts[k];
            ++total;
        }
    }

    prof.shell_volumes = shell_volumes(d, prof.layer_edges, n_mc, seed);
    prof.density_ratio.resize(n_layers);
    prof.delta = 0.0;
    for (int k = 0; k < n_layers; ++k) {
        double vol = prof.shell_volumes[k];
        double share = static_cast<double>(prof.counts[k]) / static_cast<double>(total);
        prof.density_ratio[k] = vol > 0.0 ? share / vol : 0.0;
        if (vol > 0.0) prof.delta += vol * std::max(0.0, 1.0 - prof.density_ratio[k]);
    }
    return prof;
}

}  // namespace umaxpro
