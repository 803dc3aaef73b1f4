#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace mtd {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Migration cost matrix; entry (i,j) is the cost of moving from
/// configuration i to j. Diagonal entries may be positive (refresh cost).
using MigrationMatrix = Matrix;

/// Invalid input (bad scenario field, non-stochastic matrix, off-grid tau).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A solver precondition does not hold (e.g. the alpha <= 1/(n*rho) bound).
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Value iteration hit its iteration cap before the span criterion was met.
class NonConvergenceError : public std::runtime_error {
public:
    NonConvergenceError(const std::string& msg, double span)
        : std::runtime_error(msg), last_span(span) {}
    double last_span;
};

} // namespace mtd
