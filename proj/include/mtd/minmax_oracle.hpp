#pragma once

#include "mtd/minmax.hpp"

namespace mtd {

// Independent checks for solve_inner. Both evaluate the objective directly
// and share no code with the structured solver.

/// Exhaustive search over the alpha-truncated simplex discretized at the
/// given resolution; n <= 4 only. Error relative to the true optimum is at
/// most resolution * (w_max + max|theta|) * n.
InnerSolution oracle_grid_search(const InnerProblem& problem, double resolution);

/// Anchor/prefix candidate enumeration followed by pairwise coordinate
/// descent (ternary search on convex mass transfers). Usable at any n.
InnerSolution oracle_structured_search(const InnerProblem& problem);

/// Grid mode for n <= 4, structured mode otherwise.
InnerSolution oracle_solve_inner(const InnerProblem& problem,
                                 double resolution = 1e-3);

} // namespace mtd
