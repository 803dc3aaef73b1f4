#pragma once

#include "mtd/game.hpp"
#include "mtd/scenario.hpp"

#include <optional>
#include <vector>

namespace mtd {

/// Totals from one Monte Carlo playout of the game.
struct SimResult {
    long periods = 0;
    double total_time = 0.0;
    double total_migration_cost = 0.0;
    double total_compromised_time = 0.0;
    double empirical_cost = 0.0;       // (migration + compromised) / time
    double compromised_fraction = 0.0;
};

/// Plays the game for `horizon` periods under a stationary strategy and the
/// myopic attacker. The initial state is drawn uniformly unless given.
SimResult simulate(const DefenseStrategy& strategy, const Scenario& scenario,
                   const OverlapTable& overlaps, long horizon,
                   std::mt19937_64& rng,
                   std::optional<Index> initial_state = std::nullopt);

/// Independent trials; trial k uses a stream derived from (seed, k).
std::vector<SimResult> replicate(const DefenseStrategy& strategy,
                                 const Scenario& scenario,
                                 const OverlapTable& overlaps, long horizon,
                                 int trials, std::uint64_t seed);

} // namespace mtd
