// Command line front end: solve a scenario, run the fixed-period baselines,
// simulate a strategy, run parameter sweeps, or cross-check the structured
// min-max solver against the brute-force oracle.

#include "mtd/baselines.hpp"
#include "mtd/minmax_oracle.hpp"
#include "mtd/report_io.hpp"
#include "mtd/simulator.hpp"
#include "mtd/sweep.hpp"
#include "mtd/value_iteration.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <random>

namespace {

int cmd_solve(const std::string& scenario_path, const std::string& out_path) {
    const mtd::Scenario scenario = mtd::load_scenario(scenario_path);
    const mtd::SolveReport report = mtd::solve_value_iteration(scenario);
    mtd::write_text_file(out_path, mtd::report_to_json(report));
    std::cout << "g_est " << report.g_est << " in [" << report.g_lo << ", "
              << report.g_hi << "] after " << report.iterations
              << " iterations\n";
    return 0;
}

int cmd_baseline(const std::string& scenario_path, const std::string& policy,
                 const std::string& out_path) {
    const mtd::Scenario scenario = mtd::load_scenario(scenario_path);
    const mtd::OverlapTable overlaps = scenario.overlaps();
    const mtd::BaselineResult result =
        policy == "rs" ? mtd::solve_rs(scenario, overlaps)
                       : mtd::solve_ps(scenario, overlaps);
    mtd::write_text_file(out_path, mtd::baseline_to_json(result, policy));
    std::cout << policy << " objective " << result.objective << " at tau "
              << result.tau_star << '\n';
    if (result.below_alpha)
        std::cout << "note: " << policy
                  << " row falls below the scenario's alpha floor\n";
    return 0;
}

int cmd_simulate(const std::string& scenario_path,
                 const std::string& strategy_path, long horizon, int trials,
                 std::uint64_t seed, const std::string& out_path) {
    const mtd::Scenario scenario = mtd::load_scenario(scenario_path);
    const mtd::DefenseStrategy strategy = mtd::load_strategy(strategy_path);
    const mtd::OverlapTable overlaps = scenario.overlaps();
    const auto results =
        mtd::replicate(strategy, scenario, overlaps, horizon, trials, seed);
    mtd::write_text_file(out_path, mtd::sim_results_to_json(results));
    double mean = 0.0;
    for (const auto& r : results) mean += r.empirical_cost;
    mean /= static_cast<double>(results.size());
    std::cout << "mean empirical cost " << mean << " over " << trials
              << " trials\n";
    return 0;
}

int cmd_sweep(const std::string& spec_path, const std::string& out_path,
              bool paper_scale, bool timings) {
    mtd::SweepSpec spec = mtd::load_sweep_spec(spec_path);
    if (paper_scale) {
        const mtd::SweepSpec full = mtd::default_sweep_spec(spec.kind, true);
        spec.axis = full.axis;
        spec.cost_samples = full.cost_samples;
        spec.rate_samples = full.rate_samples;
    }
    const auto rows = mtd::run_sweep(spec, timings);
    mtd::write_text_file(out_path, mtd::rows_to_csv(rows));
    std::cout << rows.size() << " rows written to " << out_path << '\n';
    return 0;
}

int cmd_oracle_check(int count, int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> w_dist(0.1, 3.0);
    std::uniform_real_distribution<double> theta_dist(0.0, 5.0);
    const double alpha = 0.01;
    const double resolution = n <= 3 ? 1e-3 : 1e-2;

    double max_dev = 0.0;
    for (int c = 0; c < count; ++c) {
        mtd::InnerProblem problem;
        problem.alpha = alpha;
        problem.w.resize(n);
        problem.theta.resize(n);
        // resample until the alpha <= 1/(n*rho) hypothesis holds
        do {
            for (int j = 0; j < n; ++j) problem.w[j] = w_dist(rng);
        } while (alpha * n * problem.w.maxCoeff() / problem.w.minCoeff() > 1.0);
        for (int j = 0; j < n; ++j) problem.theta[j] = theta_dist(rng);

        const mtd::InnerSolution fast = mtd::solve_inner(problem);
        const mtd::InnerSolution slow =
            mtd::oracle_solve_inner(problem, resolution);
        max_dev = std::max(max_dev, std::abs(fast.u - slow.u));
    }

    const double grid_bound =
        n <= 4 ? resolution * (3.0 + 5.0) * static_cast<double>(n) : 0.0;
    const double tolerance = 1e-6 + grid_bound;
    std::cout << "max deviation " << max_dev << " (tolerance " << tolerance
              << ") over " << count << " instances at n=" << n << '\n';
    if (max_dev > tolerance) {
        std::cerr << "oracle-check failed: deviation exceeds tolerance\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Joint spatial/temporal moving target defense solver"};
    app.require_subcommand(1);

    std::string scenario_path, strategy_path, out_path, spec_path, policy;
    long horizon = 100000;
    int trials = 1, count = 200, n = 4;
    std::uint64_t seed = 0;
    bool paper_scale = false, timings = false;

    auto* solve = app.add_subcommand("solve", "Run value iteration on a scenario");
    solve->add_option("--scenario", scenario_path)->required();
    solve->add_option("--out", out_path)->required();

    auto* baseline = app.add_subcommand("baseline", "Run a fixed-period baseline");
    baseline->add_option("--scenario", scenario_path)->required();
    baseline->add_option("--policy", policy)->required()
        ->check(CLI::IsMember({"rs", "ps"}));
    baseline->add_option("--out", out_path)->required();

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo playout");
    simulate->add_option("--scenario", scenario_path)->required();
    simulate->add_option("--strategy", strategy_path)->required();
    simulate->add_option("--horizon", horizon);
    simulate->add_option("--trials", trials);
    simulate->add_option("--seed", seed);
    simulate->add_option("--out", out_path)->required();

    auto* sweep = app.add_subcommand("sweep", "Parameter sweep to CSV");
    sweep->add_option("--spec", spec_path)->required();
    sweep->add_option("--out", out_path)->required();
    sweep->add_flag("--paper-scale", paper_scale,
                    "Full experiment grids and 10x10 trials");
    sweep->add_flag("--timings", timings,
                    "Record wall times (breaks byte-identical reruns)");

    auto* oracle = app.add_subcommand("oracle-check",
                                      "Min-max solver vs brute-force oracle");
    oracle->add_option("--count", count);
    oracle->add_option("--n", n)->check(CLI::Range(1, 12));
    oracle->add_option("--seed", seed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(scenario_path, out_path);
        if (baseline->parsed()) return cmd_baseline(scenario_path, policy, out_path);
        if (simulate->parsed())
            return cmd_simulate(scenario_path, strategy_path, horizon, trials,
                                seed, out_path);
        if (sweep->parsed())
            return cmd_sweep(spec_path, out_path, paper_scale, timings);
        if (oracle->parsed()) return cmd_oracle_check(count, n, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
