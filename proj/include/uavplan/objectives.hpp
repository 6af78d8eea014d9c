#pragma once

#include <array>
#include <string>
#include <vector>

#include "uavplan/plan_eval.hpp"

namespace uavplan {

inline constexpr int kObjectiveCount = 6;

// CLI-facing names, in component order.
extern const std::array<const char*, kObjectiveCount> kObjectiveNames;

// The six mission quantities the solver minimizes.
struct ObjectiveVector {
    double nUavs = 0.0;
    double totalFlightTime = 0.0;
    double totalFuel = 0.0;
    double totalDistance = 0.0;
    double totalCost = 0.0;
    double makespan = 0.0;
    bool feasible = true;

    std::array<double, kObjectiveCount> components() const {
        return {nUavs, totalFlightTime, totalFuel, totalDistance, totalCost, makespan};
    }
    bool operator==(const ObjectiveVector&) const = default;
};

// Worst-possible vector standing in for an infeasible solution; dominated by
// every feasible vector, so the NSGA-II machinery needs no special casing.
ObjectiveVector penalty_vector();

// Ordered, duplicate-free subset of the six objectives.
class ObjectiveSelection {
public:
    ObjectiveSelection() : indices_{3, 5} {}  // distance, makespan
    explicit ObjectiveSelection(std::vector<int> indices);
    static ObjectiveSelection parse(const std::string& commaList);
    static ObjectiveSelection all();

    const std::vector<int>& indices() const { return indices_; }
    std::size_t size() const { return indices_.size(); }
    std::vector<double> project(const ObjectiveVector& v) const;
    std::string to_string() const;

    bool operator==(const ObjectiveSelection&) const = default;

private:
    std::vector<int> indices_;
};

ObjectiveVector compute_objectives(const MissionScenario& scenario, const DecodedPlan& plan);

// Strict Pareto dominance (minimization) on the selected components.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b, const ObjectiveSelection& sel);

// Normalized-sum rating over all six objectives; degenerate objectives
// (min == max in the batch) contribute 0.
double rating(const ObjectiveVector& v, const std::array<double, kObjectiveCount>& batchMin,
              const std::array<double, kObjectiveCount>& batchMax);

std::vector<double> rating_batch(const std::vector<ObjectiveVector>& batch);

}  // namespace uavplan
