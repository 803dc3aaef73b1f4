#include "mtd/value_iteration.hpp"

#include "mtd/baselines.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace mtd;

namespace {

Scenario one_state_scenario(double lambda, double m) {
    Scenario s;
    s.n = 1;
    s.migration_costs = Matrix::Constant(1, 1, m);
    s.attack_models = {AttackTimeModel::exponential(lambda)};
    s.alpha = 0.01;
    s.tau_min = 0.1;
    s.tau_max = 5.0;
    s.tau_step = 0.1;
    s.omega = 0.01;
    s.gamma = 0.1;
    return s;
}

// 1-D oracle: with a single state the policy is forced and the optimal cost
// is the grid minimum of (w(tau) + m) / tau.
double one_state_grid_optimum(const Scenario& s) {
    const Vector grid = s.tau_grid();
    double best = std::numeric_limits<double>::infinity();
    for (Index t = 0; t < grid.size(); ++t) {
        const double w = expected_overlap(s.attack_models[0], grid[t]);
        best = std::min(best, (w + s.migration_costs(0, 0)) / grid[t]);
    }
    return best;
}

} // namespace

TEST_CASE("normalize_values") {
    Vector v(2);
    v << 3.0, 5.0;
    const Vector out = normalize_values(v);
    CHECK(out[0] == 0.0);
    CHECK(out[1] == 2.0);
    CHECK(normalize_values(Vector::Zero(2)) == Vector::Zero(2));
}

TEST_CASE("single-state value iteration matches the 1-D grid oracle") {
    const Scenario s = one_state_scenario(1.0, 1.0);
    // sanity for the oracle itself at tau = 5: (5 - 1 + e^-5 + 1) / 5
    CHECK((5.0 - 1.0 + std::exp(-5.0) + 1.0) / 5.0 ==
          doctest::Approx(1.00135).epsilon(1e-3));

    const SolveReport report = solve_value_iteration(s);
    CHECK(report.g_est == doctest::Approx(one_state_grid_optimum(s)).epsilon(1e-9));
    CHECK(report.strategy.P(0, 0) == doctest::Approx(1.0));
}

TEST_CASE("zero-cost game converges to zero") {
    Scenario s;
    s.n = 2;
    s.migration_costs = Matrix::Zero(2, 2);
    s.attack_models = {AttackTimeModel::deterministic(10.0),
                       AttackTimeModel::deterministic(10.0)};
    s.alpha = 0.01;
    s.tau_min = 0.1;
    s.tau_max = 5.0;
    s.tau_step = 0.1;
    s.omega = 0.01;
    s.gamma = 0.1;
    const SolveReport report = solve_value_iteration(s);
    CHECK(std::abs(report.g_est) <= 1e-9);
}

TEST_CASE("alpha precondition failure names the offending tau") {
    Scenario s;
    s.n = 2;
    s.migration_costs = Matrix::Zero(2, 2);
    // one configuration never compromised at small tau, one immediately
    s.attack_models = {AttackTimeModel::deterministic(10.0),
                       AttackTimeModel::deterministic(0.0)};
    s.alpha = 0.01;
    s.tau_min = 0.1;
    s.tau_max = 1.0;
    s.tau_step = 0.1;
    s.omega = 0.01;
    s.gamma = 0.1;
    CHECK_THROWS_AS(solve_value_iteration(s), PreconditionError);
}

TEST_CASE("iteration cap raises NonConvergenceError") {
    const Scenario s = one_state_scenario(1.0, 1.0);
    ValueIterationOptions opts;
    opts.max_iterations = 0;
    CHECK_THROWS_AS(solve_value_iteration(s, opts), NonConvergenceError);
}

TEST_CASE("normalization cadence does not change the answer") {
    std::mt19937_64 rng(83);
    const Scenario s = generate_scenario(4, 0.5, 1.0, 1.0, 2.0, rng);
    ValueIterationOptions every_iteration;
    every_iteration.normalize_every = 1;
    ValueIterationOptions never;
    never.normalize_every = 1 << 30;
    const SolveReport a = solve_value_iteration(s, every_iteration);
    const SolveReport b = solve_value_iteration(s, never);
    CHECK(a.g_est == doctest::Approx(b.g_est).epsilon(1e-9));
    CHECK((a.strategy.tau - b.strategy.tau).lpNorm<Eigen::Infinity>() <= 1e-12);
    CHECK((a.strategy.P - b.strategy.P).lpNorm<Eigen::Infinity>() <= 1e-9);
}

TEST_CASE("converged strategy is bracketed and beats the baselines") {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 3; ++trial) {
        const Scenario s = generate_scenario(5, 0.5, 1.0, 1.0, 2.0, rng);
        const OverlapTable overlaps = s.overlaps();
        const SolveReport report = solve_value_iteration(s);

        CHECK(report.g_lo <= report.g_est + 1e-12);
        CHECK(report.g_est <= report.g_hi + 1e-12);
        CHECK(report.g_hi - report.g_lo < s.omega * report.g_lo + 1e-12);

        const double g = evaluate_policy(report.strategy, s.migration_costs,
                                         overlaps).g;
        CHECK(g <= report.g_hi * (1.0 + 1e-6));
        CHECK(g >= report.g_lo * (1.0 - 1e-6));

        const double rs = solve_rs(s, overlaps).objective;
        const double ps = solve_ps(s, overlaps).objective;
        CHECK(g <= std::min(rs, ps) + 1e-6);
    }
}
