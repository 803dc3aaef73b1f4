#include "mtd/baselines.hpp"

#include <iostream>
#include <limits>

namespace mtd {

namespace {

BaselineResult make_result(const Scenario& scenario, const Vector& row,
                           double tau_star, double objective) {
    BaselineResult result;
    const Index n = scenario.n;
    result.strategy.P = row.transpose().replicate(n, 1);
    result.strategy.tau = Vector::Constant(n, tau_star);
    result.tau_star = tau_star;
    result.objective = objective;
    result.below_alpha = (row.array() < scenario.alpha - 1e-12).any();
    return result;
}

} // namespace

BaselineResult solve_rs(const Scenario& scenario, const OverlapTable& overlaps) {
    validate(scenario);
    const Index n = scenario.n;
    const double total_cost = scenario.migration_costs.sum();
    const Vector& grid = overlaps.grid;

    double best_obj = std::numeric_limits<double>::infinity();
    double best_tau = grid[0];
    for (Index t = 0; t < grid.size(); ++t) {
        const double w_max = overlaps.entries.row(t).maxCoeff();
        const double obj = (w_max + total_cost / static_cast<double>(n)) /
                           (static_cast<double>(n) * grid[t]);
        if (obj < best_obj - 1e-15) {
            best_obj = obj;
            best_tau = grid[t];
        }
    }
    const Vector row = Vector::Constant(n, 1.0 / static_cast<double>(n));
    return make_result(scenario, row, best_tau, best_obj);
}

BaselineResult solve_ps(const Scenario& scenario, const OverlapTable& overlaps) {
    validate(scenario);
    const Index n = scenario.n;
    const Vector& grid = overlaps.grid;

    double best_obj = std::numeric_limits<double>::infinity();
    double best_tau = grid[0];
    Vector best_row;
    bool clamp_noted = false;
    for (Index t = 0; t < grid.size(); ++t) {
        Vector w = overlaps.entries.row(t);
        if ((w.array() <= 0.0).any()) {
            if (!clamp_noted) {
                std::clog << "solve_ps: zero overlap entries clamped to 1e-12\n";
                clamp_noted = true;
            }
            w = w.cwiseMax(1e-12);
        }
        // w_i p_i constant with sum(p) = 1  =>  p_j = (1/w_j) / sum_k(1/w_k)
        Vector row = w.cwiseInverse();
        row /= row.sum();
        const double level = (w.array() * row.array()).maxCoeff();
        const double migration = row.dot(scenario.migration_costs * row);
        const double obj = (level + migration) / grid[t];
        if (obj < best_obj - 1e-15) {
            best_obj = obj;
            best_tau = grid[t];
            best_row = row;
        }
    }
    return make_result(scenario, best_row, best_tau, best_obj);
}

} // namespace mtd
