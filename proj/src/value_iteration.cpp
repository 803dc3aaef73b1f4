#include "mtd/value_iteration.hpp"

#include "mtd/minmax.hpp"

#include <cmath>
#include <iostream>
#include <limits>

namespace mtd {

Vector normalize_values(const Vector& V) {
    if (V.size() == 0) return V;
    return V.array() - V.minCoeff();
}

SolveReport solve_value_iteration(const Scenario& scenario,
                                  const ValueIterationOptions& options) {
    validate(scenario);
    const Index n = scenario.n;
    const Vector grid = scenario.tau_grid();
    const OverlapTable overlaps = scenario.overlaps();
    const double gamma = scenario.gamma;
    const double alpha = scenario.alpha;

    // The structured inner solver needs alpha <= 1/(n*rho) at every grid tau.
    for (Index t = 0; t < grid.size(); ++t) {
        const Vector w = overlaps.entries.row(t).cwiseMax(1e-12);
        const double rho = w.maxCoeff() / w.minCoeff();
        if (alpha * static_cast<double>(n) * rho > 1.0 + 1e-9)
            throw PreconditionError(
                "alpha exceeds 1/(n*rho) at tau = " + std::to_string(grid[t]) +
                " (rho = " + std::to_string(rho) + ")");
    }

    Vector V = Vector::Zero(n);
    DefenseStrategy strategy;
    strategy.P.resize(n, n);
    strategy.tau.resize(n);

    SolveReport report;
    bool clamp_noted = false;
    if (!clamp_noted && (overlaps.entries.array() <= 0.0).any()) {
        std::clog << "value iteration: zero overlap entries raised to 1e-12\n";
        clamp_noted = true;
    }

    double last_span = std::numeric_limits<double>::quiet_NaN();
    for (int t = 1; t <= options.max_iterations; ++t) {
        Vector V_next(n);
        for (Index i = 0; i < n; ++i) {
            double best_value = std::numeric_limits<double>::infinity();
            for (Index ti = 0; ti < grid.size(); ++ti) {
                const BellmanResult r = solve_bellman_update(
                    i, grid[ti], V, scenario.migration_costs, overlaps, gamma,
                    alpha);
                if (r.value < best_value - 1e-15) {
                    best_value = r.value;
                    strategy.P.row(i) = r.p;
                    strategy.tau[i] = grid[ti];
                }
            }
            V_next[i] = best_value;
        }

        const Vector diff = V_next - V;
        if ((diff.array() < -1e-9).any())
            std::clog << "value iteration: negative value diff at iteration "
                      << t << '\n';
        const Vector abs_diff = diff.cwiseAbs();
        const double g_lo = abs_diff.minCoeff();
        const double g_hi = abs_diff.maxCoeff();
        last_span = g_hi - g_lo;

        if (g_hi - g_lo < scenario.omega * g_lo || g_hi < 1e-14) {
            report.strategy = strategy;
            report.g_lo = g_lo;
            report.g_hi = g_hi;
            report.g_est = diff.mean();
            report.iterations = t;
            report.values = V_next;
            return report;
        }

        V = (t % options.normalize_every == 0) ? normalize_values(V_next)
                                               : V_next;
    }

    throw NonConvergenceError(
        "value iteration did not converge within " +
            std::to_string(options.max_iterations) + " iterations",
        last_span);
}

} // namespace mtd
