#pragma once

#include <optional>
#include <vector>

#include "uavplan/nsga.hpp"
#include "uavplan/objectives.hpp"
#include "uavplan/plan_eval.hpp"

namespace uavplan {

struct FrontPoint {
    ObjectiveVector objectives;
    Chromosome witness;
};

struct ExactPofResult {
    bool overflowed = false;
    double estimatedNodes = 0.0;
    std::vector<FrontPoint> points;  // canonically sorted by selected components

    std::vector<ObjectiveVector> vectors() const;
};

// Exact Pareto front by depth-first enumeration of the chromosome decision
// tree with dominance pruning against the incumbent archive. The admissible
// lower bound uses straight-line distances and zero waits, so pruning never
// loses a non-dominated point; `prune = false` runs the same enumeration
// without the bound for cross-checks. Refuses instances whose raw decision
// space exceeds `budget` (overflow result).
ExactPofResult exact_pof(const MissionScenario& scenario, const PathPlanner& planner,
                         const ObjectiveSelection& objectives, double budget = 1e8,
                         bool prune = true, const PlanParams& params = {});

struct Hypervolume {
    double value = 0.0;
    double standardError = 0.0;  // nonzero only for the Monte Carlo fallback
};

// Volume of objective space weakly dominated by `points` up to the reference
// corner `ref` (same value on every axis). Exact sweep in 2-D,
// inclusion-exclusion through 4-D on small fronts, Monte Carlo beyond.
Hypervolume hypervolume_union(const std::vector<std::vector<double>>& points, double ref);

struct FrontComparison {
    std::vector<ObjectiveVector> optimal;
    std::vector<ObjectiveVector> approximate;
    double hypervolumeGap = 0.0;
    double standardError = 0.0;
    bool normalized = true;
};

// Normalized hypervolume gap: region dominated by the optimal front but not
// by the approximate one, after per-objective min-max normalization over the
// union and with reference corner 1.1. Zero iff the approximate front covers
// the optimal one.
FrontComparison hypervolume_gap(const std::vector<ObjectiveVector>& optimal,
                                const std::vector<ObjectiveVector>& approximate,
                                const ObjectiveSelection& objectives);

}  // namespace uavplan
