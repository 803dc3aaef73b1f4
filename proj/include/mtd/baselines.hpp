#pragma once

#include "mtd/game.hpp"
#include "mtd/scenario.hpp"

namespace mtd {

/// A fixed-period heuristic: every state uses the same transition row and
/// the same defense period tau_star (taken from the scenario's tau grid).
struct BaselineResult {
    DefenseStrategy strategy;
    double tau_star = 0.0;
    double objective = 0.0;
    bool below_alpha = false;  // some p_j fell under the scenario's floor
};

/// Random sampling: uniform row 1/n; tau minimizes
/// [max_j w_j(tau) + (1/n) sum_ij m_ij] / (n tau) over the grid.
BaselineResult solve_rs(const Scenario& scenario, const OverlapTable& overlaps);

/// Proportional sampling: at each grid tau the row equalizes w_j p_j
/// (p_j proportional to 1/w_j); tau minimizes
/// [max_j(w_j p_j) + sum_ij p_i p_j m_ij] / tau.
BaselineResult solve_ps(const Scenario& scenario, const OverlapTable& overlaps);

} // namespace mtd
