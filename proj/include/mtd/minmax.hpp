#pragma once

#include "mtd/attack_model.hpp"
#include "mtd/types.hpp"

namespace mtd {

/// Inner minimization of one Bellman update at a fixed tau:
///   min_p  max_j(w_j p_j) + sum_j p_j theta_j
///   s.t.   p in [alpha, 1]^n, sum_j p_j = 1
/// with theta_j = m_j + gamma V(j).
struct InnerProblem {
    Vector w;      // all > 0
    Vector theta;
    double alpha;  // in (0, 1/n], and <= 1/(n * w_max/w_min)
};

struct InnerSolution {
    Vector p;
    double u;  // objective value at p
};

/// theta_j = m_j + gamma * V_j.
Vector theta_coefficients(const Vector& m_row, double gamma, const Vector& V);

/// Objective max_j(w_j p_j) + p . theta.
double inner_objective(const InnerProblem& problem, const Vector& p);

/// Structured O(n^2 log n) solver. For each anchor k it floors the
/// high-theta set at alpha, equalizes w_j p_j over a theta-sorted prefix of
/// the remainder, and keeps the feasible candidate of least objective.
/// Throws PreconditionError when alpha > 1/(n*rho), rho = w_max/w_min, and
/// ValidationError when some w_j <= 0.
InnerSolution solve_inner(const InnerProblem& problem);

/// One Bellman minimization for state i at an on-grid tau. Zero overlap
/// entries are raised to 1e-12 before the inner solve. Returns the optimal
/// row together with  value = u/tau + (1 - gamma/tau) V(i).
struct BellmanResult {
    Vector p;
    double value;
};

BellmanResult solve_bellman_update(Index i, double tau, const Vector& V,
                                   const MigrationMatrix& M,
                                   const OverlapTable& overlaps, double gamma,
                                   double alpha);

} // namespace mtd
