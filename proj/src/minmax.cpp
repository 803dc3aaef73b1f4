#include "mtd/minmax.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace mtd {

Vector theta_coefficients(const Vector& m_row, double gamma, const Vector& V) {
    if (m_row.size() != V.size())
        throw ValidationError("theta_coefficients dimension mismatch");
    return m_row + gamma * V;
}

double inner_objective(const InnerProblem& problem, const Vector& p) {
    return (problem.w.array() * p.array()).maxCoeff() + p.dot(problem.theta);
}

namespace {

bool lexicographically_smaller(const Vector& a, const Vector& b) {
    for (Index j = 0; j < a.size(); ++j) {
        if (a[j] < b[j] - 1e-15) return true;
        if (a[j] > b[j] + 1e-15) return false;
    }
    return false;
}

} // namespace

InnerSolution solve_inner(const InnerProblem& problem) {
    const Index n = problem.w.size();
    if (n == 0 || problem.theta.size() != n)
        throw ValidationError("inner problem dimension mismatch");
    for (Index j = 0; j < n; ++j)
        if (!(problem.w[j] > 0.0))
            throw ValidationError("inner problem requires all w_j > 0");
    const double alpha = problem.alpha;
    if (!(alpha > 0.0) || alpha * static_cast<double>(n) > 1.0 + 1e-12)
        throw PreconditionError("alpha must lie in (0, 1/n]");
    const double rho = problem.w.maxCoeff() / problem.w.minCoeff();
    if (alpha * static_cast<double>(n) * rho > 1.0 + 1e-9)
        throw PreconditionError("alpha exceeds 1/(n*rho) with rho = " +
                                std::to_string(rho));

    const Vector& w = problem.w;
    const Vector& theta = problem.theta;
    constexpr double feas_tol = 1e-12;

    InnerSolution best;
    best.u = std::numeric_limits<double>::infinity();

    std::vector<Index> B;
    B.reserve(static_cast<std::size_t>(n));
    Vector p(n);

    for (Index k = 0; k < n; ++k) {
        // A: configurations whose theta exceeds w_k + theta_k; they get the
        // floor alpha in any optimum anchored at k. B: the rest, sorted by
        // theta nondecreasing (ties by index).
        B.clear();
        Index a_count = 0;
        const double cut = w[k] + theta[k];
        for (Index j = 0; j < n; ++j) {
            if (j == k) continue;
            if (theta[j] > cut)
                ++a_count;
            else
                B.push_back(j);
        }
        std::sort(B.begin(), B.end(), [&](Index x, Index y) {
            if (theta[x] != theta[y]) return theta[x] < theta[y];
            return x < y;
        });
        const Index b_count = static_cast<Index>(B.size());

        // q = size of the prefix of B whose w_j p_j is equalized to w_k p_k.
        double ratio_sum = 0.0;  // sum_{j <= q} w_k / w_{b_j}
        for (Index q = 0; q <= b_count; ++q) {
            if (q > 0) ratio_sum += w[k] / w[B[static_cast<std::size_t>(q - 1)]];
            const double pk =
                (1.0 - static_cast<double>(a_count + b_count - q) * alpha) /
                (1.0 + ratio_sum);
            if (pk < alpha - feas_tol) continue;

            p.setConstant(alpha);
            p[k] = pk;
            bool feasible = true;
            for (Index j = 0; j < q; ++j) {
                const Index b = B[static_cast<std::size_t>(j)];
                p[b] = (w[k] / w[b]) * pk;
                if (p[b] < alpha - feas_tol) {
                    feasible = false;
                    break;
                }
            }
            if (!feasible) continue;
            // w_k p_k must attain the max; a floored coordinate beating it
            // breaks the candidate's structure.
            const double peak = w[k] * pk;
            for (Index j = 0; j < n && feasible; ++j)
                if (p[j] == alpha && w[j] * alpha > peak * (1.0 + feas_tol))
                    feasible = false;
            if (!feasible) continue;

            const double u = inner_objective(problem, p);
            if (u < best.u - 1e-15 ||
                (std::abs(u - best.u) <= 1e-15 && best.p.size() == n &&
                 lexicographically_smaller(p, best.p))) {
                best.u = u;
                best.p = p;
            }
        }
    }

    if (!std::isfinite(best.u))
        throw PreconditionError("no feasible structured candidate found");
    return best;
}

BellmanResult solve_bellman_update(Index i, double tau, const Vector& V,
                                   const MigrationMatrix& M,
                                   const OverlapTable& overlaps, double gamma,
                                   double alpha) {
    if (!(gamma > 0.0) || gamma > tau + 1e-12)
        throw ValidationError("solve_bellman_update requires 0 < gamma <= tau");
    InnerProblem inner;
    inner.w = overlaps.row(tau).cwiseMax(1e-12);
    inner.theta = theta_coefficients(M.row(i), gamma, V);
    inner.alpha = alpha;
    const InnerSolution sol = solve_inner(inner);
    BellmanResult result;
    result.p = sol.p;
    result.value = sol.u / tau + (1.0 - gamma / tau) * V[i];
    return result;
}

} // namespace mtd
