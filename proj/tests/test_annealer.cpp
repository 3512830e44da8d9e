#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "umaxpro/annealer.hpp"
#include "umaxpro/rng.hpp"
#include "umaxpro/samplers.hpp"

using namespace umaxpro;

namespace {

Schedule quick_schedule() {
    Schedule s;
    s.t_init = 0.5;
    s.cooling_ratio = 0.9;
    s.moves_per_temperature = 50;
    s.t_min = 1e-4;
    return s;
}

}  // namespace

TEST_CASE("Schedule validation rejects degenerate configurations") {
    Schedule s;
    s.t_init = 1.0;
    s.t_min = 2.0;
    CHECK_THROWS_AS(s.validate(), DesignError);
    s.t_min = 0.5;
    s.cooling_ratio = 1.0;
    CHECK_THROWS_AS(s.validate(), DesignError);
    s.cooling_ratio = 0.95;
    CHECK_NOTHROW(s.validate());
}

TEST_CASE("optimize: n_sim=2, n_var=1 has a single orbit") {
    LhsDesign lhs(2, 1);
    lhs.level(0, 0) = 1;
    lhs.level(1, 0) = 2;
    double initial = criterion_cost(realize(lhs), CriterionSpec::umaxpro());
    auto res = optimize(lhs, CriterionSpec::umaxpro(), quick_schedule(), 1);
    CHECK(res.best_value == doctest::Approx(initial).epsilon(1e-12));
}

TEST_CASE("optimize: deterministic in (initial, spec, sched, seed)") {
    LhsDesign lhs = random_lhs(8, 2, 12);
    auto a = optimize(lhs, CriterionSpec::umaxpro(), quick_schedule(), 99);
    auto b = optimize(lhs, CriterionSpec::umaxpro(), quick_schedule(), 99);
    CHECK(a.best.levels == b.best.levels);
    CHECK(a.best_value == b.best_value);
    CHECK(a.accepted == b.accepted);
    CHECK(a.rejected == b.rejected);
    REQUIRE(a.history.size() == b.history.size());
    for (std::size_t i = 0; i < a.history.size(); ++i) {
        CHECK(a.history[i].current == b.history[i].current);
        CHECK(a.history[i].best == b.history[i].best);
    }
}

TEST_CASE("optimize: never worse than the initial design, best trace non-increasing") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        LhsDesign lhs = random_lhs(10, 3, seed);
        double initial = criterion_cost(realize(lhs), CriterionSpec::umaxpro());
        auto res = optimize(lhs, CriterionSpec::umaxpro(), quick_schedule(), seed + 100);
        CHECK(res.best_value <= initial + 1e-12);
        for (std::size_t i = 1; i < res.history.size(); ++i)
            CHECK(res.history[i].best <= res.history[i - 1].best + 1e-12);
        CHECK(res.best_value ==
              doctest::Approx(criterion_cost(realize(res.best), CriterionSpec::umaxpro()))
                  .epsilon(1e-9));
        // every visited design stays a Latin hypercube
        CHECK(validate_lhs(realize(res.best), lhs.n_sim).all_pass);
    }
}

TEST_CASE("optimize: near-zero t_init degenerates to stochastic greedy descent") {
    LhsDesign lhs = random_lhs(8, 2, 3);
    Schedule s = quick_schedule();
    s.t_init = 1e-9;
    s.t_min = 1e-12;
    auto res = optimize(lhs, CriterionSpec::umaxpro(), s, 5);
    // with T ~ 0 every accepted move is an improvement, so the current value
    // in the history can only decrease
    for (std::size_t i = 1; i < res.history.size(); ++i)
        CHECK(res.history[i].current <= res.history[i - 1].current + 1e-9);
}

TEST_CASE("greedy_polish: fixed point and local optimality") {
    LhsDesign lhs = random_lhs(6, 2, 31);
    long swaps = 0;
    LhsDesign polished = greedy_polish(lhs, CriterionSpec::umaxpro(), &swaps);
    double val = criterion_cost(realize(polished), CriterionSpec::umaxpro());

    // exhaustive single-swap sweep: nothing improves
    for (int v = 0; v < 2; ++v) {
        for (int a = 0; a < 5; ++a) {
            for (int b = a + 1; b < 6; ++b) {
                LhsDesign t = polished;
                std::swap(t.level(a, v), t.level(b, v));
                double cand = criterion_cost(realize(t), CriterionSpec::umaxpro());
                CHECK(cand >= val * (1.0 - 1e-9));
            }
        }
    }

    long swaps2 = 0;
    LhsDesign again = greedy_polish(polished, CriterionSpec::umaxpro(), &swaps2);
    CHECK(swaps2 == 0);
    CHECK(again.levels == polished.levels);
}

TEST_CASE("greedy_polish never increases the objective") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        LhsDesign lhs = random_lhs(8, 2, seed * 13 + 1);
        double before = criterion_cost(realize(lhs), CriterionSpec::umaxpro());
        LhsDesign polished = greedy_polish(lhs, CriterionSpec::umaxpro());
        double after = criterion_cost(realize(polished), CriterionSpec::umaxpro());
        CHECK(after <= before + 1e-12);
    }
}

TEST_CASE("auto_initial_temperature: fallback when no sampled move is uphill") {
    // n_sim=2, n_var=1: the only swap mirrors the design, delta is never > 0
    LhsDesign lhs(2, 1);
    lhs.level(0, 0) = 1;
    lhs.level(1, 0) = 2;
    double t0 = auto_initial_temperature(lhs, CriterionSpec::umaxpro(), 1);
    CHECK(t0 == doctest::Approx(0.04).epsilon(1e-12));  // 0.01 * objective (= 4)
}

TEST_CASE("auto_initial_temperature: fallback and acceptance target") {
    // a globally optimal tiny design: every swap keeps or worsens value,
    // exercise the normal path instead on a random design
    LhsDesign lhs = random_lhs(12, 2, 8);
    double t0 = auto_initial_temperature(lhs, CriterionSpec::umaxpro(), 17);
    CHECK(t0 > 0.0);

    // measured uphill acceptance at t0 on fresh deltas lands near 0.8
    CriterionState st(lhs, CriterionSpec::umaxpro());
    double cur = st.cost();
    Rng rng(555);
    double acc = 0.0;
    int uphill = 0;
    for (int k = 0; k < 2000; ++k) {
        int v = rng.uniform_int(2);
        auto [a, b] = rng.distinct_pair(12);
        double d = st.swap_cost(v, a, b) - cur;
        if (d > 0.0 && std::isfinite(d)) {
            acc += std::exp(-d / t0);
            ++uphill;
        }
    }
    REQUIRE(uphill > 0);
    acc /= uphill;
    CHECK(acc >= 0.6);
    CHECK(acc <= 0.95);
}

TEST_CASE("auto_initial_temperature: closed form for uniform positive deltas") {
    // T0 = q / ln(1.25) when every sampled uphill delta equals q
    double q = 0.37;
    CHECK(q / std::log(1.0 / 0.8) == doctest::Approx(q / std::log(1.25)).epsilon(1e-12));
}
