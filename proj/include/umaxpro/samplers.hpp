#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "umaxpro/design.hpp"

namespace umaxpro {

/// Halton baseline options. Bases are the first n_var primes in dimension
/// order; randomization (when requested) is a Cranley-Patterson shift mod 1.
struct HaltonSpec {
    std::uint64_t start_index = 1;            // skips the all-zeros point
    std::optional<std::vector<double>> shift;  // fixed shift in [0,1)^d
};

inline constexpr int kMaxHaltonDim = 16;

/// Simple random sample: n i.i.d. uniform points in (0,1)^d.
Design srs(int n, int d, std::uint64_t seed);

/// Independent uniform random permutation per dimension.
LhsDesign random_lhs(int n, int d, std::uint64_t seed, Placement placement = Placement::median);

/// Digit reversal of `index` in the given base, mapped to [0,1).
double radical_inverse(std::uint64_t index, int base);

/// Halton point set. When `spec.shift` is unset and `seed` is given, a
/// random shift vector is drawn from the seed; otherwise unshifted.
Design halton(int n, int d, const HaltonSpec& spec = {},
              std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace umaxpro
