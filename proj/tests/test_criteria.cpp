#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "umaxpro/criteria.hpp"
#include "umaxpro/rng.hpp"
#include "umaxpro/samplers.hpp"

using namespace umaxpro;

namespace {

Design two_points(double a0, double a1, double b0, double b1) {
    Design d(2, 2);
    d.at(0, 0) = a0;
    d.at(0, 1) = a1;
    d.at(1, 0) = b0;
    d.at(1, 1) = b1;
    return d;
}

Design one_dim(std::initializer_list<double> xs) {
    Design d(static_cast<int>(xs.size()), 1);
    int s = 0;
    for (double x : xs) d.at(s++, 0) = x;
    return d;
}

}  // namespace

TEST_CASE("delta and periodic_delta basics") {
    CHECK(delta(0.2, 0.9) == doctest::Approx(0.7));
    CHECK(delta(0.9, 0.2) == doctest::Approx(0.7));
    CHECK(delta(0.4, 0.4) == 0.0);
    CHECK(periodic_delta(0.7) == doctest::Approx(0.3));
    CHECK(periodic_delta(0.5) == doctest::Approx(0.5));
    CHECK(periodic_delta(0.3) == doctest::Approx(0.3));
}

TEST_CASE("maxpro_value: hand values and the coincident-projection sentinel") {
    Design d = two_points(0.25, 0.25, 0.75, 0.75);
    auto obj = maxpro_value(d);
    CHECK(obj.finite);
    CHECK(obj.value == doctest::Approx(4.0).epsilon(1e-12));

    Design bad = two_points(0.25, 0.3, 0.25, 0.8);  // shared coordinate in dim 0
    auto s = maxpro_value(bad);
    CHECK_FALSE(s.finite);
    CHECK(s.pair_i == 0);
    CHECK(s.pair_j == 1);
}

TEST_CASE("maxpro_value is invariant to row reordering") {
    Design d = realize(random_lhs(6, 3, 5));
    Design rev(6, 3);
    for (int s = 0; s < 6; ++s)
        for (int v = 0; v < 3; ++v)
            rev.at(s, v) = d.at(5 - s, v);
    CHECK(maxpro_value(rev).value == doctest::Approx(maxpro_value(d).value).epsilon(1e-12));
}

TEST_CASE("umaxpro_value: periodic hand values") {
    // both deltas are 0.5 so the metrics coincide
    Design d = two_points(0.25, 0.25, 0.75, 0.75);
    CHECK(umaxpro_value(d).value == doctest::Approx(4.0).epsilon(1e-12));

    Design edge = one_dim({0.05, 0.95});
    CHECK(umaxpro_value(edge).value == doctest::Approx(100.0).epsilon(1e-12));
    CHECK(maxpro_value(edge).value == doctest::Approx(1.0 / 0.81).epsilon(1e-12));
}

TEST_CASE("umaxpro_value is invariant under mod-1 translation") {
    Design d = realize(random_lhs(8, 2, 19));
    double base = umaxpro_value(d).value;
    Rng rng(77);
    for (int k = 0; k < 20; ++k) {
        Design t = translate_mod1(d, {rng.uniform01(), rng.uniform01()});
        CHECK(umaxpro_value(t).value == doctest::Approx(base).epsilon(1e-9));
    }
}

TEST_CASE("morris_mitchell_value: hand values and large-k limit") {
    Design unit = two_points(0.1, 0.2, 0.7, 1.0 - 1e-9);  // distance 1 pair
    // place exactly at distance 1: use (0,0)-(0.6,0.8)
    Design exact = two_points(0.0, 0.0, 0.6, 0.8);
    for (double k : {1.0, 2.0, 7.5}) {
        CHECK(morris_mitchell_value(exact, k, MetricKind::intersite).value ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
    (void)unit;

    Design half = one_dim({0.25, 0.75});
    CHECK(morris_mitchell_value(half, 2.0, MetricKind::intersite).value ==
          doctest::Approx(2.0).epsilon(1e-12));

    // k -> infinity approaches 1 / (minimum pairwise distance), monotonically
    Design d = realize(random_lhs(4, 2, 3));
    double inv_min = 1.0 / oracle::maximin(d, false);
    double prev = 0.0;
    for (double k : {5.0, 15.0, 50.0}) {
        double val = morris_mitchell_value(d, k, MetricKind::intersite).value;
        CHECK(val >= prev);
        CHECK(val >= inv_min * 0.8);
        prev = val;
    }
    CHECK(std::abs(prev - inv_min) / inv_min < 0.35);
}

TEST_CASE("maximin_value: both metrics") {
    Design half = one_dim({0.25, 0.75});
    CHECK(maximin_value(half, MetricKind::intersite) == doctest::Approx(0.5));
    CHECK(maximin_value(half, MetricKind::periodic) == doctest::Approx(0.5));

    Design edge = one_dim({0.05, 0.95});
    CHECK(maximin_value(edge, MetricKind::intersite) == doctest::Approx(0.9));
    CHECK(maximin_value(edge, MetricKind::periodic) == doctest::Approx(0.1));

    // equilateral triangle with side 0.4
    Design tri(3, 2);
    tri.at(0, 0) = 0.3;
    tri.at(0, 1) = 0.3;
    tri.at(1, 0) = 0.7;
    tri.at(1, 1) = 0.3;
    tri.at(2, 0) = 0.5;
    tri.at(2, 1) = 0.3 + 0.4 * std::sqrt(3.0) / 2.0;
    CHECK(maximin_value(tri, MetricKind::intersite) == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(maximin_value(tri, MetricKind::intersite) ==
          doctest::Approx(oracle::maximin(tri, false)).epsilon(1e-12));
}

TEST_CASE("criteria match naive oracles on random designs") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        int n = 3 + static_cast<int>(seed % 4);
        int d = 1 + static_cast<int>(seed % 3);
        Design dsg = srs(n, d, seed);
        CHECK(maxpro_value(dsg).value ==
              doctest::Approx(oracle::maxpro(dsg, false)).epsilon(1e-12));
        CHECK(umaxpro_value(dsg).value ==
              doctest::Approx(oracle::maxpro(dsg, true)).epsilon(1e-12));
        CHECK(morris_mitchell_value(dsg, 15.0, MetricKind::periodic).value ==
              doctest::Approx(oracle::morris_mitchell(dsg, 15.0, true)).epsilon(1e-12));
        CHECK(maximin_value(dsg, MetricKind::intersite) ==
              doctest::Approx(oracle::maximin(dsg, false)).epsilon(1e-12));
        CHECK(maximin_value(dsg, MetricKind::periodic) ==
              doctest::Approx(oracle::maximin(dsg, true)).epsilon(1e-12));
    }
}

TEST_CASE("domination: umaxpro >= maxpro, equality iff all deltas <= 0.5") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Design dsg = srs(5, 2, seed);
        double mp = oracle::maxpro(dsg, false);
        double ump = umaxpro_value(dsg).value;
        CHECK(ump >= mp * (1.0 - 1e-12));
        bool all_small = true;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 5; ++j)
                for (int v = 0; v < 2; ++v)
                    if (oracle::proj(dsg, i, j, v, false) > 0.5) all_small = false;
        if (all_small) CHECK(ump == doctest::Approx(mp).epsilon(1e-12));
        else CHECK(ump > mp);
    }
}

TEST_CASE("symmetry: row permutation, dimension permutation, reflection") {
    Design d = realize(random_lhs(7, 3, 101));
    Design reflected(7, 3);
    Design dimswap(7, 3);
    for (int s = 0; s < 7; ++s)
        for (int v = 0; v < 3; ++v) {
            reflected.at(s, v) = 1.0 - d.at(s, v);
            dimswap.at(s, v) = d.at(s, (v + 1) % 3);
        }
    for (auto spec : {CriterionSpec::maxpro(), CriterionSpec::umaxpro(),
                      CriterionSpec::morris_mitchell(15.0, MetricKind::periodic),
                      CriterionSpec::maximin(MetricKind::intersite),
                      CriterionSpec::periodic_maximin()}) {
        double base = criterion_cost(d, spec);
        CHECK(criterion_cost(reflected, spec) == doctest::Approx(base).epsilon(1e-9));
        CHECK(criterion_cost(dimswap, spec) == doctest::Approx(base).epsilon(1e-9));
    }
}

TEST_CASE("pair-count homogeneity of the MaxPro objective") {
    // doubling every cached term doubles S, scaling the objective by 2^{1/d}
    Design d = realize(random_lhs(5, 2, 7));
    double sum = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 5; ++j) {
            double prod = 1.0;
            for (int v = 0; v < 2; ++v) {
                double dl = oracle::proj(d, i, j, v, true);
                prod *= dl * dl;
            }
            sum += 1.0 / prod;
        }
    double pairs = 10.0;
    double val = std::pow(sum / pairs, 0.5);
    double val2 = std::pow(2.0 * sum / pairs, 0.5);
    CHECK(val2 == doctest::Approx(val * std::pow(2.0, 0.5)).epsilon(1e-12));
    CHECK(val == doctest::Approx(umaxpro_value(d).value).epsilon(1e-12));
}

TEST_CASE("CriterionState: total matches the direct value on random LHS designs") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        LhsDesign lhs = random_lhs(4 + static_cast<int>(seed % 8), 2 + static_cast<int>(seed % 3),
                                   seed);
        CriterionState st(lhs, CriterionSpec::umaxpro());
        CHECK(st.cost() == doctest::Approx(umaxpro_value(realize(lhs)).value).epsilon(1e-12));
    }
}

TEST_CASE("CriterionState: single pair for n_sim = 2") {
    LhsDesign lhs(2, 2);
    lhs.level(0, 0) = 1;
    lhs.level(1, 0) = 2;
    lhs.level(0, 1) = 2;
    lhs.level(1, 1) = 1;
    CriterionState st(lhs, CriterionSpec::umaxpro());
    CHECK(st.term_count() == 1);
}

TEST_CASE("swap then undo restores the cached terms bit-for-bit") {
    LhsDesign lhs = random_lhs(8, 3, 41);
    CriterionState st(lhs, CriterionSpec::umaxpro());
    std::vector<double> before(st.term_count());
    for (std::size_t i = 0; i < before.size(); ++i) before[i] = st.term(i);
    st.commit_swap(1, 2, 5);
    st.commit_swap(1, 2, 5);
    for (std::size_t i = 0; i < before.size(); ++i) CHECK(st.term(i) == before[i]);
}

TEST_CASE("swap_cost equals full recomputation over many random swaps") {
    for (auto spec : {CriterionSpec::umaxpro(), CriterionSpec::maxpro(),
                      CriterionSpec::morris_mitchell(15.0, MetricKind::intersite),
                      CriterionSpec::periodic_maximin()}) {
        LhsDesign lhs = random_lhs(10, 3, 4242);
        CriterionState st(lhs, spec);
        Rng rng(7);
        for (int k = 0; k < 300; ++k) {
            int v = rng.uniform_int(3);
            auto [a, b] = rng.distinct_pair(10);
            double predicted = st.swap_cost(v, a, b);
            st.commit_swap(v, a, b);
            double direct = criterion_cost(realize(st.lhs()), spec);
            CHECK(predicted == doctest::Approx(direct).epsilon(1e-9));
            CHECK(st.cost() == doctest::Approx(direct).epsilon(1e-9));
        }
    }
}

TEST_CASE("drift after many committed swaps stays below 1e-9 relative") {
    LhsDesign lhs = random_lhs(16, 3, 5);
    CriterionState st(lhs, CriterionSpec::umaxpro());
    Rng rng(6);
    for (int k = 0; k < 1000; ++k) {
        int v = rng.uniform_int(3);
        auto [a, b] = rng.distinct_pair(16);
        st.commit_swap(v, a, b);
    }
    double direct = umaxpro_value(realize(st.lhs())).value;
    CHECK(st.cost() == doctest::Approx(direct).epsilon(1e-9));
}
