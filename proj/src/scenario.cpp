#include "mtd/scenario.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace mtd {

using nlohmann::json;

void validate(const Scenario& s) {
    if (s.n < 1) throw ValidationError("scenario field 'n' must be >= 1");
    if (s.migration_costs.rows() != s.n || s.migration_costs.cols() != s.n)
        throw ValidationError("scenario field 'M' must be an n x n matrix");
    if ((s.migration_costs.array() < 0.0).any())
        throw ValidationError("scenario field 'M' must be nonnegative");
    if (static_cast<Index>(s.attack_models.size()) != s.n)
        throw ValidationError("scenario field 'attack_models' must have n entries");
    if (!(s.alpha > 0.0) || s.alpha > 1.0 / static_cast<double>(s.n) + 1e-12)
        throw ValidationError("scenario field 'alpha' must lie in (0, 1/n]");
    if (!(s.tau_min > 0.0) || !(s.tau_max >= s.tau_min))
        throw ValidationError("scenario fields 'tau_min'/'tau_max' must satisfy 0 < tau_min <= tau_max");
    if (!(s.tau_step > 0.0))
        throw ValidationError("scenario field 'delta' must be > 0");
    if (!(s.omega > 0.0))
        throw ValidationError("scenario field 'omega' must be > 0");
    if (!(s.gamma > 0.0) || s.gamma > s.tau_min + 1e-12)
        throw ValidationError("scenario field 'gamma' must lie in (0, tau_min]");
}

Scenario generate_scenario(Index n, double cost_lo, double cost_hi,
                           double mean_lo, double mean_hi,
                           std::mt19937_64& rng) {
    if (n < 1) throw ValidationError("generate_scenario requires n >= 1");
    if (!(cost_lo >= 0.0) || !(cost_hi >= cost_lo))
        throw ValidationError("invalid migration cost range");
    if (!(mean_hi >= mean_lo))
        throw ValidationError("invalid mean attack time range");

    Scenario s;
    s.n = n;
    s.migration_costs.resize(n, n);
    std::uniform_real_distribution<double> cost(cost_lo, cost_hi);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) s.migration_costs(i, j) = cost(rng);

    std::uniform_real_distribution<double> mean(mean_lo, mean_hi);
    s.attack_models.reserve(static_cast<std::size_t>(n));
    for (Index j = 0; j < n; ++j) {
        double m = mean(rng);
        if (m < 0.05) {
            std::clog << "generate_scenario: mean attack time " << m
                      << " floored at 0.05\n";
            m = 0.05;
        }
        s.attack_models.push_back(AttackTimeModel::exponential(1.0 / m));
    }
    s.gamma = s.tau_min;
    return s;
}

namespace {

json model_to_json(const AttackTimeModel& m) {
    switch (m.kind) {
    case AttackTimeModel::Kind::Exponential:
        return json{{"type", "exponential"}, {"rate", m.rate}};
    case AttackTimeModel::Kind::Deterministic:
        return json{{"type", "deterministic"}, {"value", m.value}};
    case AttackTimeModel::Kind::Empirical:
        return json{{"type", "empirical"}, {"samples", m.samples}};
    }
    return {};
}

AttackTimeModel model_from_json(const json& j) {
    if (!j.contains("type"))
        throw ValidationError("attack model missing field 'type'");
    const std::string type = j.at("type").get<std::string>();
    if (type == "exponential") {
        if (!j.contains("rate"))
            throw ValidationError("exponential attack model missing field 'rate'");
        return AttackTimeModel::exponential(j.at("rate").get<double>());
    }
    if (type == "deterministic") {
        if (!j.contains("value"))
            throw ValidationError("deterministic attack model missing field 'value'");
        return AttackTimeModel::deterministic(j.at("value").get<double>());
    }
    if (type == "empirical") {
        if (!j.contains("samples"))
            throw ValidationError("empirical attack model missing field 'samples'");
        return AttackTimeModel::empirical(
            j.at("samples").get<std::vector<double>>());
    }
    throw ValidationError("unknown attack model type '" + type + "'");
}

double require_number(const json& j, const char* field) {
    if (!j.contains(field))
        throw ValidationError(std::string("scenario missing field '") + field + "'");
    if (!j.at(field).is_number())
        throw ValidationError(std::string("scenario field '") + field +
                              "' must be a number");
    return j.at(field).get<double>();
}

} // namespace

std::string scenario_to_json(const Scenario& s) {
    json j;
    j["n"] = s.n;
    json rows = json::array();
    for (Index i = 0; i < s.n; ++i) {
        json row = json::array();
        for (Index k = 0; k < s.n; ++k) row.push_back(s.migration_costs(i, k));
        rows.push_back(std::move(row));
    }
    j["M"] = std::move(rows);
    json models = json::array();
    for (const auto& m : s.attack_models) models.push_back(model_to_json(m));
    j["attack_models"] = std::move(models);
    j["alpha"] = s.alpha;
    j["tau_min"] = s.tau_min;
    j["tau_max"] = s.tau_max;
    j["delta"] = s.tau_step;
    j["omega"] = s.omega;
    j["gamma"] = s.gamma;
    j["seed"] = s.seed;
    return j.dump(2);
}

Scenario scenario_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("scenario is not valid JSON: ") + e.what());
    }
    Scenario s;
    s.n = static_cast<Index>(require_number(j, "n"));
    if (!j.contains("M") || !j.at("M").is_array())
        throw ValidationError("scenario field 'M' must be an array of rows");
    const auto& rows = j.at("M");
    if (static_cast<Index>(rows.size()) != s.n)
        throw ValidationError("scenario field 'M' must have n rows");
    s.migration_costs.resize(s.n, s.n);
    for (Index i = 0; i < s.n; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Index>(row.size()) != s.n)
            throw ValidationError("scenario field 'M' row " + std::to_string(i) +
                                  " must have n entries");
        for (Index k = 0; k < s.n; ++k)
            s.migration_costs(i, k) = row[static_cast<std::size_t>(k)].get<double>();
    }
    if (!j.contains("attack_models") || !j.at("attack_models").is_array())
        throw ValidationError("scenario field 'attack_models' must be an array");
    for (const auto& mj : j.at("attack_models"))
        s.attack_models.push_back(model_from_json(mj));
    s.alpha = require_number(j, "alpha");
    s.tau_min = require_number(j, "tau_min");
    s.tau_max = require_number(j, "tau_max");
    s.tau_step = require_number(j, "delta");
    s.omega = require_number(j, "omega");
    s.gamma = j.contains("gamma") ? require_number(j, "gamma") : s.tau_min;
    s.seed = j.contains("seed")
                 ? j.at("seed").get<std::uint64_t>()
                 : 0;
    validate(s);
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return scenario_from_json(buf.str());
}

void save_scenario(const Scenario& scenario, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write scenario file: " + path);
    out << scenario_to_json(scenario) << '\n';
}

} // namespace mtd
