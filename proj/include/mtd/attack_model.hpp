#pragma once

#include "mtd/types.hpp"

#include <random>
#include <vector>

namespace mtd {

/// Distribution of the time an attacker needs to compromise a configuration
/// once it has guessed it correctly.
struct AttackTimeModel {
    enum class Kind { Exponential, Deterministic, Empirical };

    Kind kind = Kind::Deterministic;
    double rate = 0.0;            // exponential: lambda > 0
    double value = 0.0;           // deterministic: point mass >= 0
    std::vector<double> samples;  // empirical: nonempty, all >= 0

    static AttackTimeModel exponential(double lambda);
    static AttackTimeModel deterministic(double c);
    static AttackTimeModel empirical(std::vector<double> samples);

    double mean() const;
};

/// E[max(tau - a, 0)]: expected time the system stays compromised within a
/// defense period of length tau, given a correct guess. Closed form for the
/// exponential and deterministic variants, plug-in sample mean for empirical.
double expected_overlap(const AttackTimeModel& model, double tau);

/// One draw from the model's distribution.
double sample_attack_time(const AttackTimeModel& model, std::mt19937_64& rng);

/// Precomputed overlap values w(tau, j) over a fixed tau grid.
/// entries(t, j) = expected overlap of model j at grid point t.
struct OverlapTable {
    Vector grid;     // strictly increasing, all >= 0
    Matrix entries;  // grid.size() x n

    Index num_configs() const { return entries.cols(); }

    /// Index of tau in the grid; tau must match a grid point within 1e-12.
    Index lookup(double tau) const;

    /// Overlap row (all configurations) at an on-grid tau.
    Vector row(double tau) const { return entries.row(lookup(tau)); }
};

/// Inclusive grid tau_min, tau_min+step, ..., tau_max; tau_max is appended
/// when the range is not an exact multiple of step.
Vector make_tau_grid(double tau_min, double tau_max, double step);

/// Exact table via expected_overlap.
OverlapTable build_overlap_table(const std::vector<AttackTimeModel>& models,
                                 const Vector& tau_grid);

/// Monte Carlo table: per configuration, sample_count draws shared across all
/// grid points, redrawn per call.
OverlapTable estimate_overlap_table(const std::vector<AttackTimeModel>& models,
                                    const Vector& tau_grid, int sample_count,
                                    std::mt19937_64& rng);

} // namespace mtd
