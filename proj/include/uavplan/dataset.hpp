#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uavplan/scenario.hpp"

namespace uavplan {

// Structural axes of a synthetic mission: how many tasks of each kind, the
// fleet mix, GCS/NFZ counts and the fixed/unfixed window split.
struct DatasetRecipe {
    std::string name;
    std::vector<std::pair<TaskKind, int>> taskMix;
    std::vector<std::pair<UavType, int>> uavMix;
    int gcsCount = 1;
    int nfzCount = 0;
    int fixedTimeCount = 0;
    int unfixedTimeCount = 0;
    int dependencyCount = 0;
    int lowCoverageGcsCount = 0;  // GCSs with a deliberately short reach
    int gcsCapacity = 0;          // 0 = unconstrained rule (fleet size + 1 / fleet size)
    double windowGapHours = 3.0;  // stagger between consecutive fixed windows
    std::uint64_t seed = 1;

    int task_count() const;
    int uav_count() const;
};

// Built-in recipes d1, d2, d3, d4a..d4e, d5 and small synthetic shapes
// tiny2/tiny3/tiny4 for oracle-scale studies.
DatasetRecipe builtin_recipe(const std::string& name, std::uint64_t seed);
std::vector<std::string> builtin_recipe_names();

// Deterministic scenario construction from a recipe: tasks placed clear of
// the NFZs, fleet and GCSs on the region border, fixed windows staggered so
// any compatible UAV can chain them. Construction is retried with derived
// seeds until a feasibility probe passes; throws after 100 attempts.
MissionScenario generate_dataset(const DatasetRecipe& recipe);

}  // namespace uavplan
