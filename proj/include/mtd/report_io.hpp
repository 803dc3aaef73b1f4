#pragma once

#include "mtd/baselines.hpp"
#include "mtd/simulator.hpp"
#include "mtd/value_iteration.hpp"

#include <string>
#include <vector>

namespace mtd {

// Results file formats.
//   SolveReport:    {"P":[[..]],"tau":[..],"g_lo":..,"g_hi":..,"g_est":..,
//                    "iterations":..}
//   BaselineResult: same layout plus {"policy":"rs"|"ps"}
//   DefenseStrategy loads from any file carrying "P" and "tau".

std::string report_to_json(const SolveReport& report);
std::string baseline_to_json(const BaselineResult& result,
                             const std::string& policy);
std::string sim_results_to_json(const std::vector<SimResult>& results);

DefenseStrategy strategy_from_json(const std::string& text);
DefenseStrategy load_strategy(const std::string& path);
SolveReport report_from_json(const std::string& text);

void write_text_file(const std::string& path, const std::string& text);

} // namespace mtd
