#include "umaxpro/samplers.hpp"

#include <numeric>

#include "umaxpro/rng.hpp"

namespace umaxpro {

namespace {
constexpr int kPrimes[kMaxHaltonDim] = {2,  3,  5,  7,  11, 13, 17, 19,
                                        23, 29, 31, 37, 41, 43, 47, 53};
}

Design srs(int n, int d, std::uint64_t seed) {
    if (n < 1 || d < 1) throw DesignError("srs requires n >= 1 and d >= 1");
    Rng rng(seed);
    Design out(n, d);
    for (int s = 0; s < n; ++s)
        for (int v = 0; v < d; ++v)
            out.at(s, v) = rng.uniform01();
    return out;
}

LhsDesign random_lhs(int n, int d, std::uint64_t seed, Placement placement) {
    if (n < 2 || d < 1) throw DesignError("random_lhs requires n >= 2 and d >= 1");
    Rng rng(seed);
    LhsDesign out(n, d);
    out.placement = placement;
    std::vector<int> perm(n);
    for (int v = 0; v < d; ++v) {
        std::iota(perm.begin(), perm.end(), 1);
        for (int i = n - 1; i > 0; --i) {
            int j = rng.uniform_int(i + 1);
            std::swap(perm[i], perm[j]);
        }
        for (int s = 0; s < n; ++s) out.level(s, v) = perm[s];
    }
    if (placement == Placement::random) {
        out.offsets.resize(static_cast<std::size_t>(n) * d);
        for (auto& u : out.offsets) u = rng.uniform01();
    }
    return out;
}

double radical_inverse(std::uint64_t index, int base) {
    if (base < 2) throw DesignError("radical inverse base must be >= 2");
    double inv_base = 1.0 / base;
    double factor = inv_base;
    double value = 0.0;
    while (index > 0) {
        value += static_cast<double>(index % base) * factor;
        index /= base;
        factor *= inv_base;
    }
    return value;
}

Design halton(int n, int d, const HaltonSpec& spec, std::optional<std::uint64_t> seed) {
    if (n < 1 || d < 1) throw DesignError("halton requires n >= 1 and d >= 1");
    if (d > kMaxHaltonDim)
        throw DesignError("halton supports at most " + std::to_string(kMaxHaltonDim) +
                          " dimensions");
    if (spec.start_index < 1) throw DesignError("halton start index must be >= 1");
    if (spec.shift && spec.shift->size() != static_cast<std::size_t>(d))
        throw DesignError("halton shift length must equal d");

    std::vector<double> shift(d, 0.0);
    if (spec.shift) {
        shift = *spec.shift;
        for (double c : shift)
            if (!(c >= 0.0 && c < 1.0)) throw DesignError("halton shift entries must lie in [0,1)");
    } else if (seed) {
        Rng rng(*seed);
        for (double& c : shift) c = rng.uniform01();
    }

    Design out(n, d);
    for (int s = 0; s < n; ++s)
        for (int v = 0; v < d; ++v)
            out.at(s, v) = wrap01(radical_inverse(spec.start_index + s, kPrimes[v]) + shift[v]);
    return out;
}

}  // namespace umaxpro
