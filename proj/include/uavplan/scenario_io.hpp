#pragma once

#include <string>

#include "uavplan/scenario.hpp"

namespace uavplan {

// Scenario file codec (JSON, UTF-8). Top-level sections: region, tasks,
// uavs, gcss, nfzs, dependencies. Unknown fields are rejected. UAV entries
// may give only id/type/position (catalog defaults fill the rest); the
// serializer always writes the full form, so parse(serialize(s)) == s.
// The format is documented in docs/scenario-format.md.
std::string scenario_to_string(const MissionScenario& scenario);
MissionScenario scenario_from_string(const std::string& text);

MissionScenario load_scenario(const std::string& path);
void save_scenario(const MissionScenario& scenario, const std::string& path);

}  // namespace uavplan
