#pragma once

#include "mtd/game.hpp"

#include <utility>

namespace mtd {

// Conversion of the average-cost semi-MDP into an equivalent discrete-time
// average-cost MDP. The transformation parameter gamma must satisfy
// 0 < gamma <= tau_i for every state; gamma = tau_min is used throughout.

/// Per-step cost of the transformed chain: stage_cost / tau_i.
double transformed_stage_cost(const Vector& p_row, double tau_i, Index i,
                              const MigrationMatrix& M,
                              const OverlapTable& overlaps);

/// Transformed transition row: p~_ij = gamma * (p_ij - delta_ij) / tau_i
/// + delta_ij, where i is the row's own state index. Row sums are preserved
/// exactly; entries stay nonnegative whenever gamma <= tau_i.
Vector transformed_transition(const Vector& p_row, double tau_i, double gamma,
                              Index i);

/// Evaluates the same strategy on both chains; the two averages agree within
/// 1e-9 relative for any valid strategy. Returns (g_semi, g_mdp).
std::pair<double, double> verify_equivalence(const DefenseStrategy& strategy,
                                             const MigrationMatrix& M,
                                             const OverlapTable& overlaps,
                                             double gamma);

} // namespace mtd
