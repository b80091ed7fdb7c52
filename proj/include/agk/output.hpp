#pragma once

#include <string>

#include "agk/scenarios.hpp"

namespace agk {

// CSV column orders are part of the tool's interface:
//   events:  scenario,seed_index,crossing_index,t,x,px,energy_error
//   metrics: scenario,seed_index,escaped,escape_time,crossings,second_integral_drift,max_energy_error
// Optional fields are left empty. Formatting is fixed at %.17g so repeated
// runs produce byte-identical files.
std::string events_csv(const ScenarioDataset& data);
std::string metrics_csv(const ScenarioDataset& data);

/// Scatter of the section events in the (x, px) window of the scenario.
std::string section_svg(const ScenarioDataset& data);

/// Write via a temporary file and rename, so readers never see partial output.
void write_file_atomic(const std::string& path, const std::string& content);

std::string format_double(double v);

}  // namespace agk
