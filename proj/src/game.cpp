#include "mtd/game.hpp"

#include <cmath>

namespace mtd {

namespace {
void check_row(const Vector& p_row, Index n) {
    if (p_row.size() != n)
        throw ValidationError("probability row has wrong dimension");
    if (std::abs(p_row.sum() - 1.0) > 1e-9)
        throw ValidationError("probability row does not sum to 1");
    if ((p_row.array() < -1e-12).any())
        throw ValidationError("probability row has negative entries");
}
} // namespace

double stage_cost(const Vector& p_row, double tau_i, Index i,
                  const MigrationMatrix& M, const OverlapTable& overlaps) {
    const Index n = overlaps.num_configs();
    check_row(p_row, n);
    const Vector w = overlaps.row(tau_i);
    const double loss = (p_row.array() * w.array()).maxCoeff();
    const double migration = p_row.dot(M.row(i));
    return loss + migration;
}

Index attacker_best_response(const Vector& p_row, double tau_i,
                             const OverlapTable& overlaps) {
    check_row(p_row, overlaps.num_configs());
    const Vector w = overlaps.row(tau_i);
    Index best = 0;
    double best_val = p_row[0] * w[0];
    for (Index j = 1; j < p_row.size(); ++j) {
        const double v = p_row[j] * w[j];
        if (v > best_val) {
            best_val = v;
            best = j;
        }
    }
    return best;
}

Vector stationary_distribution(const Matrix& P) {
    const Index n = P.rows();
    if (P.cols() != n || n == 0)
        throw ValidationError("transition matrix must be square and nonempty");
    for (Index i = 0; i < n; ++i) {
        if (std::abs(P.row(i).sum() - 1.0) > 1e-9)
            throw ValidationError("transition matrix row " + std::to_string(i) +
                                  " does not sum to 1");
        if ((P.row(i).array() < -1e-12).any())
            throw ValidationError("transition matrix has negative entries");
    }

    Vector pi = Vector::Constant(n, 1.0 / static_cast<double>(n));
    const Matrix Pt = P.transpose();
    for (long iter = 0; iter < 1000000; ++iter) {
        Vector next = Pt * pi;
        next /= next.sum();
        const double residual = (Pt * next - next).lpNorm<Eigen::Infinity>();
        if (residual <= 1e-12) return next;
        pi = next;
    }

    // Slowly mixing chain: solve (P^T - I) pi = 0 with sum(pi) = 1 directly.
    Matrix A = Pt - Matrix::Identity(n, n);
    A.row(n - 1).setOnes();
    Vector b = Vector::Zero(n);
    b[n - 1] = 1.0;
    pi = A.colPivHouseholderQr().solve(b);
    if ((Pt * pi - pi).lpNorm<Eigen::Infinity>() > 1e-10)
        throw ValidationError("stationary distribution did not converge");
    return pi;
}

PolicyCost evaluate_policy(const DefenseStrategy& strategy,
                           const MigrationMatrix& M,
                           const OverlapTable& overlaps) {
    const Index n = strategy.P.rows();
    if (strategy.tau.size() != n || M.rows() != n || M.cols() != n)
        throw ValidationError("strategy/cost matrix dimension mismatch");
    PolicyCost result;
    result.pi = stationary_distribution(strategy.P);
    result.stage_costs.resize(n);
    for (Index i = 0; i < n; ++i)
        result.stage_costs[i] =
            stage_cost(strategy.P.row(i), strategy.tau[i], i, M, overlaps);
    result.g = result.pi.dot(result.stage_costs) / result.pi.dot(strategy.tau);
    return result;
}

void validate_strategy(const DefenseStrategy& strategy, double floor,
                       double tau_min, double tau_max) {
    const Index n = strategy.P.rows();
    if (strategy.P.cols() != n)
        throw ValidationError("strategy matrix P must be square");
    if (strategy.tau.size() != n)
        throw ValidationError("strategy tau vector has wrong dimension");
    for (Index i = 0; i < n; ++i) {
        if (std::abs(strategy.P.row(i).sum() - 1.0) > 1e-9)
            throw ValidationError("strategy row " + std::to_string(i) +
                                  " does not sum to 1");
        for (Index j = 0; j < n; ++j)
            if (strategy.P(i, j) < floor - 1e-12 || strategy.P(i, j) > 1.0 + 1e-12)
                throw ValidationError("strategy entry p(" + std::to_string(i) + "," +
                                      std::to_string(j) + ") outside [floor, 1]");
        if (strategy.tau[i] < tau_min - 1e-12 || strategy.tau[i] > tau_max + 1e-12)
            throw ValidationError("strategy tau[" + std::to_string(i) +
                                  "] outside [tau_min, tau_max]");
    }
}

} // namespace mtd
