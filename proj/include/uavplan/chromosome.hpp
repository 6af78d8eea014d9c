#pragma once

#include <string>
#include <vector>

#include "uavplan/scenario.hpp"

namespace uavplan {

// Six-allele genotype of a mission plan.
//
//   1. assignUavs   per task: ordered distinct UAV indices (requiredUavCount)
//   2. orderPerm    global permutation of task indices
//   3. gcsOf        per UAV: controlling GCS index
//   4. pathProfile  per task, per assigned-UAV slot: profile index of that UAV
//   5. sensorUsed   per task, per assigned-UAV slot: task sensor kind provided
//   6. returnProfile per UAV: profile index for the return leg
//
// Alleles 1, 4 and 5 are parallel per task, so operators always move a
// task's (uav, profile, sensor) entries together.
struct Chromosome {
    std::vector<std::vector<int>> assignUavs;
    std::vector<int> orderPerm;
    std::vector<int> gcsOf;
    std::vector<std::vector<int>> pathProfile;
    std::vector<std::vector<SensorKind>> sensorUsed;
    std::vector<int> returnProfile;

    bool operator==(const Chromosome&) const = default;
};

// Structural invariant check. Empty result means the chromosome is valid
// input for decode(); anything listed is an operator or construction bug.
std::vector<std::string> structural_violations(const MissionScenario& scenario, const Chromosome& c);

inline bool structurally_valid(const MissionScenario& scenario, const Chromosome& c) {
    return structural_violations(scenario, c).empty();
}

// Compact single-line rendering for reports.
std::string render_chromosome(const MissionScenario& scenario, const Chromosome& c);

}  // namespace uavplan
