#include "mtd/sweep.hpp"

#include "mtd/baselines.hpp"
#include "mtd/simulator.hpp"
#include "mtd/value_iteration.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

namespace mtd {

using nlohmann::json;

SweepSpec default_sweep_spec(SweepKind kind, bool paper_scale) {
    SweepSpec spec;
    spec.kind = kind;
    spec.cost_samples = paper_scale ? 10 : 3;
    spec.rate_samples = paper_scale ? 10 : 3;
    switch (kind) {
    case SweepKind::ConfigurationCount:
        spec.axis = paper_scale ? std::vector<double>{5, 10, 15, 20, 25, 30}
                                : std::vector<double>{5, 10, 15};
        break;
    case SweepKind::MeanAttackTime:
        spec.axis = paper_scale ? std::vector<double>{0.5, 1.0, 1.5, 2.0, 2.5}
                                : std::vector<double>{0.5, 1.5, 2.5};
        break;
    case SweepKind::CostVariance:
        spec.axis = paper_scale
                        ? std::vector<double>{0.25, 0.5, 0.75, 1.0, 1.25}
                        : std::vector<double>{0.25, 0.75, 1.25};
        break;
    }
    return spec;
}

namespace {

SweepKind kind_from_string(const std::string& s) {
    if (s == "configuration-count") return SweepKind::ConfigurationCount;
    if (s == "mean-attack-time") return SweepKind::MeanAttackTime;
    if (s == "cost-variance") return SweepKind::CostVariance;
    throw ValidationError("unknown sweep kind '" + s + "'");
}

const char* kind_prefix(SweepKind kind) {
    switch (kind) {
    case SweepKind::ConfigurationCount: return "n";
    case SweepKind::MeanAttackTime: return "nu";
    case SweepKind::CostVariance: return "hw";
    }
    return "?";
}

std::mt19937_64 derived_rng(std::uint64_t seed, std::uint64_t a,
                            std::uint64_t b, std::uint64_t c) {
    std::seed_seq seq{seed, a, b, c};
    return std::mt19937_64(seq);
}

/// Scenario for one (axis point, cost sample, rate sample) cell; migration
/// costs and attack rates come from independent derived streams so each axis
/// point reuses the same cost matrices across rate samples and vice versa,
/// mirroring the 10 x 10 trial structure of the experiments.
Scenario cell_scenario(const SweepSpec& spec, std::size_t point, double axis,
                       int cost_sample, int rate_sample) {
    Index n = 10;
    double cost_lo = 0.0, cost_hi = 1.5, mean_lo = 1.0, mean_hi = 2.0;
    switch (spec.kind) {
    case SweepKind::ConfigurationCount:
        n = static_cast<Index>(std::lround(axis));
        break;
    case SweepKind::MeanAttackTime:
        cost_lo = 0.5;
        cost_hi = 1.0;
        mean_lo = axis - 0.5;
        mean_hi = axis + 0.5;
        break;
    case SweepKind::CostVariance:
        cost_lo = 1.5 - axis;
        cost_hi = 1.5 + axis;
        mean_lo = 0.5;
        mean_hi = 1.5;
        break;
    }

    Scenario s;
    s.n = n;
    s.migration_costs.resize(n, n);
    auto cost_rng = derived_rng(spec.seed, point, 1,
                                static_cast<std::uint64_t>(cost_sample));
    std::uniform_real_distribution<double> cost(cost_lo, cost_hi);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) s.migration_costs(i, j) = cost(cost_rng);

    auto rate_rng = derived_rng(spec.seed, point, 2,
                                static_cast<std::uint64_t>(rate_sample));
    std::uniform_real_distribution<double> mean(mean_lo, mean_hi);
    for (Index j = 0; j < n; ++j) {
        double m = mean(rate_rng);
        if (m < 0.05) {
            std::clog << "sweep: mean attack time " << m << " floored at 0.05\n";
            m = 0.05;
        }
        s.attack_models.push_back(AttackTimeModel::exponential(1.0 / m));
    }
    s.gamma = s.tau_min;
    s.seed = spec.seed;
    return s;
}

std::string fmt(double x) {
    if (std::isnan(x)) return "nan";
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

} // namespace

SweepSpec sweep_spec_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("sweep spec is not valid JSON: ") +
                              e.what());
    }
    if (!j.contains("kind"))
        throw ValidationError("sweep spec missing field 'kind'");
    SweepSpec spec = default_sweep_spec(kind_from_string(j.at("kind")));
    if (j.contains("axis")) spec.axis = j.at("axis").get<std::vector<double>>();
    if (j.contains("cost_samples")) spec.cost_samples = j.at("cost_samples").get<int>();
    if (j.contains("rate_samples")) spec.rate_samples = j.at("rate_samples").get<int>();
    if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("simulate_horizon"))
        spec.simulate_horizon = j.at("simulate_horizon").get<long>();
    if (spec.axis.empty()) throw ValidationError("sweep spec axis is empty");
    if (spec.cost_samples < 1 || spec.rate_samples < 1)
        throw ValidationError("sweep spec trial counts must be >= 1");
    return spec;
}

SweepSpec load_sweep_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open sweep spec file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return sweep_spec_from_json(buf.str());
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, bool measure_time) {
    std::vector<SweepRow> rows;
    const double nan = std::numeric_limits<double>::quiet_NaN();

    for (std::size_t point = 0; point < spec.axis.size(); ++point) {
        const double axis = spec.axis[point];
        for (int c = 0; c < spec.cost_samples; ++c) {
            for (int r = 0; r < spec.rate_samples; ++r) {
                const int trial = c * spec.rate_samples + r;
                Scenario scenario = cell_scenario(spec, point, axis, c, r);
                const OverlapTable overlaps = scenario.overlaps();
                const std::string id = std::string(kind_prefix(spec.kind)) +
                                       fmt(axis) + "_t" + std::to_string(trial);

                auto add = [&](const std::string& policy,
                               const DefenseStrategy& strategy, double g_est,
                               double g_lo, double g_hi, int iterations,
                               long wall_ms, int sim_tag) {
                    SweepRow row;
                    row.scenario_id = id;
                    row.axis_value = axis;
                    row.trial = trial;
                    row.policy = policy;
                    row.g_est = g_est;
                    row.g_lo = g_lo;
                    row.g_hi = g_hi;
                    row.iterations = iterations;
                    row.wall_time_ms = measure_time ? wall_ms : 0;
                    row.cost_evaluated =
                        evaluate_policy(strategy, scenario.migration_costs,
                                        overlaps).g;
                    if (spec.simulate_horizon > 0) {
                        auto rng = derived_rng(spec.seed, point,
                                               3 + static_cast<std::uint64_t>(sim_tag),
                                               static_cast<std::uint64_t>(trial));
                        row.cost_simulated =
                            simulate(strategy, scenario, overlaps,
                                     spec.simulate_horizon, rng).empirical_cost;
                    }
                    rows.push_back(std::move(row));
                };

                const auto t0 = std::chrono::steady_clock::now();
                try {
                    const SolveReport report = solve_value_iteration(scenario);
                    const long ms =
                        std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0).count();
                    add("vi", report.strategy, report.g_est, report.g_lo,
                        report.g_hi, report.iterations, ms, 0);
                } catch (const std::exception& e) {
                    std::clog << "sweep " << id << ": vi failed: " << e.what()
                              << '\n';
                    SweepRow row;
                    row.scenario_id = id;
                    row.axis_value = axis;
                    row.trial = trial;
                    row.policy = "vi!";
                    row.g_est = row.g_lo = row.g_hi = row.cost_evaluated = nan;
                    rows.push_back(std::move(row));
                }

                const BaselineResult rs = solve_rs(scenario, overlaps);
                add("rs", rs.strategy, rs.objective, rs.objective, rs.objective,
                    0, 0, 1);
                const BaselineResult ps = solve_ps(scenario, overlaps);
                if (ps.below_alpha)
                    std::clog << "sweep " << id
                              << ": ps row falls below the alpha floor\n";
                add("ps", ps.strategy, ps.objective, ps.objective, ps.objective,
                    0, 0, 2);
            }
        }
    }
    return rows;
}

std::string rows_to_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "scenario_id,axis_value,trial,policy,g_est,g_lo,g_hi,"
           "cost_evaluated,cost_simulated,iterations,wall_time_ms\n";
    for (const auto& row : rows) {
        out << row.scenario_id << ',' << fmt(row.axis_value) << ',' << row.trial
            << ',' << row.policy << ',' << fmt(row.g_est) << ','
            << fmt(row.g_lo) << ',' << fmt(row.g_hi) << ','
            << fmt(row.cost_evaluated) << ','
            << (row.cost_simulated ? fmt(*row.cost_simulated) : "") << ','
            << row.iterations << ',' << row.wall_time_ms << '\n';
    }
    return out.str();
}

} // namespace mtd
