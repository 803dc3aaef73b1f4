#include "mtd/minmax_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace mtd {

namespace {

// Direct objective evaluation, independent of inner_objective.
double direct_objective(const Vector& w, const Vector& theta, const Vector& p) {
    double peak = -std::numeric_limits<double>::infinity();
    double linear = 0.0;
    for (Index j = 0; j < p.size(); ++j) {
        peak = std::max(peak, w[j] * p[j]);
        linear += p[j] * theta[j];
    }
    return peak + linear;
}

} // namespace

InnerSolution oracle_grid_search(const InnerProblem& problem, double resolution) {
    const Index n = problem.w.size();
    if (n > 4)
        throw ValidationError("oracle grid search supports n <= 4 only");
    if (!(resolution > 0.0))
        throw ValidationError("oracle grid resolution must be > 0");
    const double alpha = problem.alpha;
    const double slack = 1.0 - alpha * static_cast<double>(n);
    if (slack < -1e-12)
        throw ValidationError("alpha-truncated simplex is empty");
    const long steps = std::lround(slack / resolution);

    InnerSolution best;
    best.u = std::numeric_limits<double>::infinity();
    Vector p(n);

    // p_j = alpha + k_j * (slack / steps) with sum k_j = steps.
    const double unit = steps > 0 ? slack / static_cast<double>(steps) : 0.0;
    std::vector<long> counts(static_cast<std::size_t>(n), 0);
    auto recurse = [&](auto&& self, Index j, long remaining) -> void {
        if (j == n - 1) {
            counts[static_cast<std::size_t>(j)] = remaining;
            for (Index t = 0; t < n; ++t)
                p[t] = alpha + static_cast<double>(counts[static_cast<std::size_t>(t)]) * unit;
            const double u = direct_objective(problem.w, problem.theta, p);
            if (u < best.u) {
                best.u = u;
                best.p = p;
            }
            return;
        }
        for (long k = 0; k <= remaining; ++k) {
            counts[static_cast<std::size_t>(j)] = k;
            self(self, j + 1, remaining - k);
        }
    };
    recurse(recurse, 0, steps);
    return best;
}

InnerSolution oracle_structured_search(const InnerProblem& problem) {
    const Index n = problem.w.size();
    const double alpha = problem.alpha;
    const Vector& w = problem.w;
    const Vector& theta = problem.theta;

    InnerSolution best;
    best.u = std::numeric_limits<double>::infinity();

    // Candidate family: pick an anchor, put every other configuration either
    // at the floor or on the equalized level w_j p_j = w_k p_k, scanning all
    // theta-ordered prefixes.
    std::vector<Index> order(static_cast<std::size_t>(n));
    for (Index k = 0; k < n; ++k) {
        order.clear();
        for (Index j = 0; j < n; ++j)
            if (j != k) order.push_back(j);
        std::sort(order.begin(), order.end(), [&](Index x, Index y) {
            if (theta[x] != theta[y]) return theta[x] < theta[y];
            return x < y;
        });
        double inv_sum = 1.0 / w[k];
        for (std::size_t q = 0; q <= order.size(); ++q) {
            if (q > 0) inv_sum += 1.0 / w[order[q - 1]];
            const double floored =
                static_cast<double>(order.size() - q) * alpha;
            const double level = (1.0 - floored) / inv_sum;  // shared w_j p_j
            Vector p = Vector::Constant(n, alpha);
            p[k] = level / w[k];
            bool ok = p[k] >= alpha - 1e-12;
            for (std::size_t j = 0; j < q && ok; ++j) {
                const Index b = order[j];
                p[b] = level / w[b];
                ok = p[b] >= alpha - 1e-12;
            }
            if (!ok) continue;
            const double u = direct_objective(w, theta, p);
            if (u < best.u) {
                best.u = u;
                best.p = p;
            }
        }
    }
    if (!std::isfinite(best.u)) {
        best.p = Vector::Constant(n, 1.0 / static_cast<double>(n));
        best.u = direct_objective(w, theta, best.p);
    }

    // Pairwise coordinate descent: the objective restricted to moving mass
    // between two coordinates is convex, so ternary search finds the best
    // transfer.
    Vector p = best.p;
    for (int pass = 0; pass < 200; ++pass) {
        double improved = 0.0;
        for (Index a = 0; a < n; ++a) {
            for (Index b = 0; b < n; ++b) {
                if (a == b) continue;
                const double t_max = p[a] - alpha;
                if (t_max <= 0.0) continue;
                double lo = 0.0, hi = t_max;
                for (int it = 0; it < 80; ++it) {
                    const double t1 = lo + (hi - lo) / 3.0;
                    const double t2 = hi - (hi - lo) / 3.0;
                    Vector pa = p, pb = p;
                    pa[a] -= t1; pa[b] += t1;
                    pb[a] -= t2; pb[b] += t2;
                    if (direct_objective(w, theta, pa) <=
                        direct_objective(w, theta, pb))
                        hi = t2;
                    else
                        lo = t1;
                }
                const double t = 0.5 * (lo + hi);
                Vector cand = p;
                cand[a] -= t; cand[b] += t;
                const double u = direct_objective(w, theta, cand);
                if (u < best.u - 1e-14) {
                    improved += best.u - u;
                    best.u = u;
                    best.p = cand;
                    p = cand;
                }
            }
        }
        if (improved < 1e-13) break;
    }
    return best;
}

InnerSolution oracle_solve_inner(const InnerProblem& problem, double resolution) {
    if (problem.w.size() <= 4) return oracle_grid_search(problem, resolution);
    return oracle_structured_search(problem);
}

} // namespace mtd
