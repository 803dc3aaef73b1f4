#include "mtd/simulator.hpp"

#include <algorithm>
#include <cmath>

namespace mtd {

SimResult simulate(const DefenseStrategy& strategy, const Scenario& scenario,
                   const OverlapTable& overlaps, long horizon,
                   std::mt19937_64& rng, std::optional<Index> initial_state) {
    if (horizon < 1) throw ValidationError("simulate requires horizon >= 1");
    const Index n = scenario.n;
    validate_strategy(strategy, 0.0, scenario.tau_min, scenario.tau_max);
    if (strategy.P.rows() != n)
        throw ValidationError("strategy does not match the scenario size");

    // Per-state precomputation: the attacker's guess and the row CDF.
    std::vector<Index> guess(static_cast<std::size_t>(n));
    Matrix cdf(n, n);
    for (Index i = 0; i < n; ++i) {
        guess[static_cast<std::size_t>(i)] =
            attacker_best_response(strategy.P.row(i), strategy.tau[i], overlaps);
        double acc = 0.0;
        for (Index j = 0; j < n; ++j) {
            acc += strategy.P(i, j);
            cdf(i, j) = acc;
        }
        cdf(i, n - 1) = 1.0;
    }

    std::uniform_real_distribution<double> u01(0.0, 1.0);
    Index state;
    if (initial_state) {
        if (*initial_state < 0 || *initial_state >= n)
            throw ValidationError("initial state out of range");
        state = *initial_state;
    } else {
        std::uniform_int_distribution<Index> pick(0, n - 1);
        state = pick(rng);
    }

    SimResult result;
    for (long k = 0; k < horizon; ++k) {
        const double tau = strategy.tau[state];
        const Index attacked = guess[static_cast<std::size_t>(state)];

        const double u = u01(rng);
        Index next = n - 1;
        for (Index j = 0; j < n; ++j) {
            if (u <= cdf(state, j)) {
                next = j;
                break;
            }
        }

        result.total_time += tau;
        result.total_migration_cost += scenario.migration_costs(state, next);
        if (next == attacked) {
            const double a = sample_attack_time(
                scenario.attack_models[static_cast<std::size_t>(attacked)], rng);
            result.total_compromised_time += std::max(tau - a, 0.0);
        }
        state = next;
    }
    result.periods = horizon;
    result.empirical_cost =
        (result.total_migration_cost + result.total_compromised_time) /
        result.total_time;
    result.compromised_fraction =
        result.total_compromised_time / result.total_time;
    return result;
}

std::vector<SimResult> replicate(const DefenseStrategy& strategy,
                                 const Scenario& scenario,
                                 const OverlapTable& overlaps, long horizon,
                                 int trials, std::uint64_t seed) {
    if (trials < 1) throw ValidationError("replicate requires trials >= 1");
    std::vector<SimResult> results;
    results.reserve(static_cast<std::size_t>(trials));
    for (int k = 0; k < trials; ++k) {
        std::seed_seq seq{static_cast<std::uint64_t>(seed),
                          static_cast<std::uint64_t>(k)};
        std::mt19937_64 rng(seq);
        results.push_back(simulate(strategy, scenario, overlaps, horizon, rng));
    }
    return results;
}

} // namespace mtd
