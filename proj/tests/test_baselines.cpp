#include "mtd/baselines.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace mtd;

namespace {

Scenario basic_scenario(Index n, std::vector<AttackTimeModel> models,
                        const Matrix& M) {
    Scenario s;
    s.n = n;
    s.migration_costs = M;
    s.attack_models = std::move(models);
    s.alpha = 0.01;
    s.tau_min = 0.1;
    s.tau_max = 5.0;
    s.tau_step = 0.1;
    s.omega = 0.01;
    s.gamma = 0.1;
    return s;
}

} // namespace

TEST_CASE("random sampling baseline") {
    SUBCASE("zero-cost game picks the smallest tau") {
        const Scenario s = basic_scenario(
            1, {AttackTimeModel::deterministic(10.0)}, Matrix::Zero(1, 1));
        const BaselineResult r = solve_rs(s, s.overlaps());
        CHECK(r.objective == doctest::Approx(0.0));
        CHECK(r.tau_star == doctest::Approx(0.1));
    }
    SUBCASE("single state matches the forced-policy grid optimum") {
        const Scenario s = basic_scenario(
            1, {AttackTimeModel::exponential(1.0)}, Matrix::Constant(1, 1, 1.0));
        const BaselineResult r = solve_rs(s, s.overlaps());
        const Vector grid = s.tau_grid();
        double best = std::numeric_limits<double>::infinity();
        for (Index t = 0; t < grid.size(); ++t)
            best = std::min(
                best, (expected_overlap(s.attack_models[0], grid[t]) + 1.0) /
                          grid[t]);
        CHECK(r.objective == doctest::Approx(best).epsilon(1e-12));
    }
    SUBCASE("symmetric two-state closed form") {
        const double mu = 0.7;
        const Scenario s = basic_scenario(
            2,
            {AttackTimeModel::exponential(1.0), AttackTimeModel::exponential(1.0)},
            Matrix::Constant(2, 2, mu));
        const BaselineResult r = solve_rs(s, s.overlaps());
        const Vector grid = s.tau_grid();
        double best = std::numeric_limits<double>::infinity();
        for (Index t = 0; t < grid.size(); ++t) {
            const double w = expected_overlap(s.attack_models[0], grid[t]);
            best = std::min(best, (w + 2.0 * mu) / (2.0 * grid[t]));
        }
        CHECK(r.objective == doctest::Approx(best).epsilon(1e-12));
    }
    SUBCASE("migration term is linear in the cost matrix") {
        std::mt19937_64 rng(97);
        const Scenario s = generate_scenario(4, 0.5, 1.5, 1.0, 2.0, rng);
        Scenario doubled = s;
        doubled.migration_costs *= 2.0;
        const OverlapTable overlaps = s.overlaps();
        const BaselineResult r1 = solve_rs(s, overlaps);
        const Vector grid = s.tau_grid();
        // at every tau: obj(2M) - obj(M) = (sum M / n) / (n tau)
        for (Index t = 0; t < grid.size(); ++t) {
            const double w_max = overlaps.entries.row(t).maxCoeff();
            const double n = static_cast<double>(s.n);
            const double base =
                (w_max + s.migration_costs.sum() / n) / (n * grid[t]);
            const double twice =
                (w_max + 2.0 * s.migration_costs.sum() / n) / (n * grid[t]);
            CHECK(twice - base == doctest::Approx(s.migration_costs.sum() /
                                                  (n * n * grid[t])));
        }
        CHECK(r1.strategy.P(0, 0) == doctest::Approx(0.25));
    }
}

TEST_CASE("proportional sampling baseline") {
    SUBCASE("equal overlaps force the uniform row") {
        const Scenario s = basic_scenario(
            3,
            {AttackTimeModel::exponential(1.0), AttackTimeModel::exponential(1.0),
             AttackTimeModel::exponential(1.0)},
            Matrix::Constant(3, 3, 0.5));
        const BaselineResult r = solve_ps(s, s.overlaps());
        for (Index j = 0; j < 3; ++j)
            CHECK(r.strategy.P(0, j) == doctest::Approx(1.0 / 3.0));
    }
    SUBCASE("two-state inverse proportionality") {
        // w = [1, 2] at some tau: p = [2/3, 1/3], max term 2/3
        OverlapTable t;
        t.grid = Vector::Constant(1, 1.0);
        t.entries.resize(1, 2);
        t.entries << 1.0, 2.0;
        Scenario s = basic_scenario(
            2, {AttackTimeModel::deterministic(0.0), AttackTimeModel::deterministic(0.0)},
            Matrix::Zero(2, 2));
        s.tau_min = s.tau_max = 1.0;
        const BaselineResult r = solve_ps(s, t);
        CHECK(r.strategy.P(0, 0) == doctest::Approx(2.0 / 3.0));
        CHECK(r.strategy.P(0, 1) == doctest::Approx(1.0 / 3.0));
        CHECK(r.objective == doctest::Approx(2.0 / 3.0));
    }
    SUBCASE("single state") {
        const Scenario s = basic_scenario(
            1, {AttackTimeModel::exponential(1.0)}, Matrix::Constant(1, 1, 0.3));
        const BaselineResult r = solve_ps(s, s.overlaps());
        const Vector grid = s.tau_grid();
        double best = std::numeric_limits<double>::infinity();
        for (Index t = 0; t < grid.size(); ++t)
            best = std::min(
                best, (expected_overlap(s.attack_models[0], grid[t]) + 0.3) /
                          grid[t]);
        CHECK(r.objective == doctest::Approx(best).epsilon(1e-12));
    }
    SUBCASE("w p products are equalized at the chosen tau") {
        std::mt19937_64 rng(101);
        const Scenario s = generate_scenario(5, 0.5, 1.0, 0.5, 1.5, rng);
        const OverlapTable overlaps = s.overlaps();
        const BaselineResult r = solve_ps(s, overlaps);
        const Vector w = overlaps.row(r.tau_star);
        const Vector products = w.cwiseProduct(Vector(r.strategy.P.row(0)));
        CHECK(products.maxCoeff() - products.minCoeff() <= 1e-9);
    }
}

TEST_CASE("baseline objectives match exact policy evaluation") {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 5; ++trial) {
        const Scenario s = generate_scenario(4, 0.2, 1.2, 0.8, 2.0, rng);
        const OverlapTable overlaps = s.overlaps();
        for (const auto& r : {solve_rs(s, overlaps), solve_ps(s, overlaps)}) {
            const double g =
                evaluate_policy(r.strategy, s.migration_costs, overlaps).g;
            CHECK(g == doctest::Approx(r.objective).epsilon(1e-9));
        }
    }
}
