#pragma once

#include <cstdint>
#include <utility>

namespace umaxpro {

// splitmix64; used for seed expansion and per-run stream derivation.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Independent stream seed for run `index` of a batch keyed by `master`.
inline std::uint64_t derive_stream(std::uint64_t master, std::uint64_t index) {
    std::uint64_t s = master;
    std::uint64_t a = splitmix64(s);
    s = master ^ (0x6a09e667f3bcc909ULL + index * 0x9e3779b97f4a7c15ULL);
    std::uint64_t b = splitmix64(s);
    return a ^ (b + 0x2545f4914f6cdd1dULL * (index + 1));
}

// xoshiro256** with a fixed expansion/rejection scheme. All randomness in
// the toolkit goes through this class so that seeded runs are reproducible
// across platforms and standard-library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t s = seed;
        for (auto& w : s_) w = splitmix64(s);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in the open interval (0,1): 53-bit mantissa, offset by half an ulp.
    double uniform01() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Uniform integer in [0, n), n >= 1, by rejection.
    int uniform_int(int n) {
        const std::uint64_t bound = static_cast<std::uint64_t>(n);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return static_cast<int>(x % bound);
    }

    // Distinct ordered pair (a, b), a < b, uniform over all such pairs.
    std::pair<int, int> distinct_pair(int n) {
        int a = uniform_int(n);
        int b = uniform_int(n - 1);
        if (b >= a) ++b;
        if (a > b) std::swap(a, b);
        return {a, b};
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t s_[4];
};

}  // namespace umaxpro
