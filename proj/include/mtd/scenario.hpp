#pragma once

#include "mtd/attack_model.hpp"
#include "mtd/types.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace mtd {

/// A full problem instance.
struct Scenario {
    Index n = 0;
    MigrationMatrix migration_costs;           // n x n, entries >= 0
    std::vector<AttackTimeModel> attack_models;  // length n
    double alpha = 0.01;
    double tau_min = 0.1;
    double tau_max = 5.0;
    double tau_step = 0.1;
    double omega = 0.01;
    double gamma = 0.1;  // transform parameter, defaults to tau_min
    std::uint64_t seed = 0;

    Vector tau_grid() const { return make_tau_grid(tau_min, tau_max, tau_step); }
    OverlapTable overlaps() const {
        return build_overlap_table(attack_models, tau_grid());
    }
};

/// Throws ValidationError naming the offending field.
void validate(const Scenario& scenario);

/// Random instance per the standard experiment setup: migration costs i.i.d.
/// uniform on [cost_lo, cost_hi], exponential attack times with mean i.i.d.
/// uniform on [mean_lo, mean_hi]. Sampled means are floored at 0.05.
Scenario generate_scenario(Index n, double cost_lo, double cost_hi,
                           double mean_lo, double mean_hi,
                           std::mt19937_64& rng);

// JSON (de)serialization. Schema:
//   {"n":..,"M":[[..]],"attack_models":[{"type":..},..],"alpha":..,
//    "tau_min":..,"tau_max":..,"delta":..,"omega":..,"gamma":..,"seed":..}
std::string scenario_to_json(const Scenario& scenario);
Scenario scenario_from_json(const std::string& text);
Scenario load_scenario(const std::string& path);
void save_scenario(const Scenario& scenario, const std::string& path);

} // namespace mtd
