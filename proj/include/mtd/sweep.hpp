#pragma once

#include "mtd/scenario.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mtd {

enum class SweepKind { ConfigurationCount, MeanAttackTime, CostVariance };

/// Parameter sweep over randomly generated scenarios. Per axis point,
/// cost_samples migration matrices are crossed with rate_samples attack-rate
/// vectors; every combination is solved by value iteration and both
/// fixed-period baselines.
struct SweepSpec {
    SweepKind kind = SweepKind::ConfigurationCount;
    std::vector<double> axis;
    int cost_samples = 3;
    int rate_samples = 3;
    std::uint64_t seed = 0;
    long simulate_horizon = 0;  // 0 = skip simulation column
};

/// Desk-scale defaults, or the full experiment grids with paper_scale.
SweepSpec default_sweep_spec(SweepKind kind, bool paper_scale = false);

SweepSpec sweep_spec_from_json(const std::string& text);
SweepSpec load_sweep_spec(const std::string& path);

struct SweepRow {
    std::string scenario_id;
    double axis_value = 0.0;
    int trial = 0;
    std::string policy;  // "vi", "rs" or "ps"; solver failures append "!"
    double g_est = 0.0;
    double g_lo = 0.0;
    double g_hi = 0.0;
    double cost_evaluated = 0.0;
    std::optional<double> cost_simulated;
    int iterations = 0;
    long wall_time_ms = 0;
};

/// Runs the sweep; rows come out in deterministic (point, trial, policy)
/// order. Wall times are reported only when measure_time is set, since they
/// would break byte-identical reruns.
std::vector<SweepRow> run_sweep(const SweepSpec& spec,
                                bool measure_time = false);

/// CSV with the fixed header
/// scenario_id,axis_value,trial,policy,g_est,g_lo,g_hi,cost_evaluated,
/// cost_simulated,iterations,wall_time_ms
std::string rows_to_csv(const std::vector<SweepRow>& rows);

} // namespace mtd
