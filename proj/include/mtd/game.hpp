#pragma once

#include "mtd/attack_model.hpp"
#include "mtd/types.hpp"

namespace mtd {

/// Stationary defender strategy: transition matrix P plus per-configuration
/// defense periods. tau[i] is the length of the next period when the previous
/// configuration was i.
struct DefenseStrategy {
    Matrix P;    // n x n, row stochastic
    Vector tau;  // length n, each on the scenario's tau grid
};

/// Exact evaluation of a stationary strategy.
struct PolicyCost {
    Vector pi;           // stationary distribution of P
    Vector stage_costs;  // c(i) = max_j(p_ij w_ij) + sum_j p_ij m_ij
    double g = 0.0;      // time-average cost
};

/// Expected one-period cost from configuration i: attacker loss term plus
/// expected migration cost.
double stage_cost(const Vector& p_row, double tau_i, Index i,
                  const MigrationMatrix& M, const OverlapTable& overlaps);

/// Myopic attacker's guess: argmax_j p_j * w_j(tau), ties to the smallest index.
Index attacker_best_response(const Vector& p_row, double tau_i,
                             const OverlapTable& overlaps);

/// Stationary distribution of a row-stochastic matrix with positive entries.
/// Power iteration to a 1e-12 residual, direct solve as fallback.
Vector stationary_distribution(const Matrix& P);

/// Time-average cost g = (pi . c) / (pi . tau), independent of the initial
/// state for the unichain chains induced by alpha-floored strategies.
PolicyCost evaluate_policy(const DefenseStrategy& strategy,
                           const MigrationMatrix& M,
                           const OverlapTable& overlaps);

/// Throws unless rows sum to 1 (1e-9), all entries in [floor, 1], and tau
/// within [tau_min, tau_max]. Pass floor = 0 for strategies evaluated outside
/// the alpha-constrained class (the fixed-period baselines).
void validate_strategy(const DefenseStrategy& strategy, double floor,
                       double tau_min, double tau_max);

} // namespace mtd
