#include "mtd/transform.hpp"

namespace mtd {

double transformed_stage_cost(const Vector& p_row, double tau_i, Index i,
                              const MigrationMatrix& M,
                              const OverlapTable& overlaps) {
    return stage_cost(p_row, tau_i, i, M, overlaps) / tau_i;
}

Vector transformed_transition(const Vector& p_row, double tau_i, double gamma,
                              Index i) {
    if (!(gamma > 0.0) || gamma > tau_i + 1e-12)
        throw ValidationError("transform requires 0 < gamma <= tau_i");
    if (i < 0 || i >= p_row.size())
        throw ValidationError("state index out of range");
    Vector row = (gamma / tau_i) * p_row;
    row[i] += 1.0 - gamma / tau_i;
    return row;
}

std::pair<double, double> verify_equivalence(const DefenseStrategy& strategy,
                                             const MigrationMatrix& M,
                                             const OverlapTable& overlaps,
                                             double gamma) {
    const double g_semi = evaluate_policy(strategy, M, overlaps).g;

    const Index n = strategy.P.rows();
    Matrix P_tilde(n, n);
    Vector c_tilde(n);
    for (Index i = 0; i < n; ++i) {
        P_tilde.row(i) =
            transformed_transition(strategy.P.row(i), strategy.tau[i], gamma, i);
        c_tilde[i] =
            transformed_stage_cost(strategy.P.row(i), strategy.tau[i], i, M, overlaps);
    }
    const Vector pi_tilde = stationary_distribution(P_tilde);
    const double g_mdp = pi_tilde.dot(c_tilde);
    return {g_semi, g_mdp};
}

} // namespace mtd
