#include "mtd/report_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace mtd {

using nlohmann::json;

namespace {

json strategy_to_jobj(const DefenseStrategy& strategy) {
    json j;
    json rows = json::array();
    for (Index i = 0; i < strategy.P.rows(); ++i) {
        json row = json::array();
        for (Index k = 0; k < strategy.P.cols(); ++k)
            row.push_back(strategy.P(i, k));
        rows.push_back(std::move(row));
    }
    j["P"] = std::move(rows);
    j["tau"] = std::vector<double>(strategy.tau.data(),
                                   strategy.tau.data() + strategy.tau.size());
    return j;
}

DefenseStrategy strategy_from_jobj(const json& j) {
    if (!j.contains("P") || !j.at("P").is_array())
        throw ValidationError("strategy missing field 'P'");
    if (!j.contains("tau") || !j.at("tau").is_array())
        throw ValidationError("strategy missing field 'tau'");
    const auto& rows = j.at("P");
    const Index n = static_cast<Index>(rows.size());
    DefenseStrategy s;
    s.P.resize(n, n);
    for (Index i = 0; i < n; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Index>(row.size()) != n)
            throw ValidationError("strategy field 'P' is not square");
        for (Index k = 0; k < n; ++k)
            s.P(i, k) = row[static_cast<std::size_t>(k)].get<double>();
    }
    const auto tau = j.at("tau").get<std::vector<double>>();
    if (static_cast<Index>(tau.size()) != n)
        throw ValidationError("strategy field 'tau' has wrong length");
    s.tau = Eigen::Map<const Vector>(tau.data(), n);
    return s;
}

} // namespace

std::string report_to_json(const SolveReport& report) {
    json j = strategy_to_jobj(report.strategy);
    j["g_lo"] = report.g_lo;
    j["g_hi"] = report.g_hi;
    j["g_est"] = report.g_est;
    j["iterations"] = report.iterations;
    return j.dump(2);
}

std::string baseline_to_json(const BaselineResult& result,
                             const std::string& policy) {
    json j = strategy_to_jobj(result.strategy);
    j["policy"] = policy;
    j["tau_star"] = result.tau_star;
    j["objective"] = result.objective;
    j["below_alpha"] = result.below_alpha;
    return j.dump(2);
}

std::string sim_results_to_json(const std::vector<SimResult>& results) {
    json arr = json::array();
    for (const auto& r : results) {
        arr.push_back({{"periods", r.periods},
                       {"total_time", r.total_time},
                       {"total_migration_cost", r.total_migration_cost},
                       {"total_compromised_time", r.total_compromised_time},
                       {"empirical_cost", r.empirical_cost},
                       {"compromised_fraction", r.compromised_fraction}});
    }
    return arr.dump(2);
}

DefenseStrategy strategy_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("strategy is not valid JSON: ") + e.what());
    }
    return strategy_from_jobj(j);
}

DefenseStrategy load_strategy(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open strategy file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return strategy_from_json(buf.str());
}

SolveReport report_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("report is not valid JSON: ") + e.what());
    }
    SolveReport r;
    r.strategy = strategy_from_jobj(j);
    r.g_lo = j.at("g_lo").get<double>();
    r.g_hi = j.at("g_hi").get<double>();
    r.g_est = j.at("g_est").get<double>();
    r.iterations = j.at("iterations").get<int>();
    return r;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write file: " + path);
    out << text << '\n';
}

} // namespace mtd
