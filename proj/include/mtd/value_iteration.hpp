#pragma once

#include "mtd/game.hpp"
#include "mtd/scenario.hpp"

namespace mtd {

/// Output of the value iteration solver. [g_lo, g_hi] brackets the optimal
/// time-average cost; g_est is the mean of the final per-state value diffs.
struct SolveReport {
    DefenseStrategy strategy;
    double g_lo = 0.0;
    double g_hi = 0.0;
    double g_est = 0.0;
    int iterations = 0;
    Vector values;
};

struct ValueIterationOptions {
    int max_iterations = 10000;
    int normalize_every = 100;
};

/// Subtracts min_i V_i; value diffs, argmins and the resulting strategy are
/// unchanged because the transformed transition rows sum to 1.
Vector normalize_values(const Vector& V);

/// Value iteration over the transformed MDP with a tau grid search per state
/// and the span stopping rule (g_hi - g_lo < omega * g_lo). Ties across tau
/// break to the smaller tau. Throws NonConvergenceError past the iteration
/// cap and PreconditionError when alpha > 1/(n*rho) at some grid tau.
SolveReport solve_value_iteration(const Scenario& scenario,
                                  const ValueIterationOptions& options = {});

} // namespace mtd
