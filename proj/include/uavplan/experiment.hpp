#pragma once

#include <set>
#include <string>
#include <vector>

#include "uavplan/dataset.hpp"
#include "uavplan/nsga.hpp"
#include "uavplan/oracle.hpp"

namespace uavplan {

enum class RunMode { Solve, Sweep, Compare };

RunMode run_mode_from_string(const std::string& s);

struct RepSummary {
    int rep = 0;
    std::uint64_t seed = 0;
    int generationsUsed = 0;
    int convergenceGeneration = 0;
    bool converged = false;
    std::size_t archiveSize = 0;
    double gap = 0.0;      // compare mode
    bool gapValid = false;
};

struct SweepRow {
    std::string objectives;
    std::size_t solutions = 0;
    int generations = 0;
    ObjectiveVector mean;  // averaged over the selected run's archive
    double rating = 0.0;
};

struct ScenarioResult {
    std::string id;
    MissionScenario scenario;
    EvolveResult best;
    int bestRep = 0;
    std::vector<RepSummary> reps;
    std::vector<SweepRow> sweepRows;  // sweep mode
    // compare mode
    bool oracleOverflow = false;
    double oracleEstimate = 0.0;
    std::vector<ObjectiveVector> optimalFront;
    double bestGap = 0.0;
    double gapStdErr = 0.0;
};

struct RunReport {
    RunMode mode = RunMode::Solve;
    GaConfig config;  // seed field carries the master seed
    int repetitions = 10;
    int gridCells = 64;
    std::vector<ScenarioResult> scenarios;

    // Deterministic text rendering; no wall-clock content.
    std::string render() const;
};

// Runs the requested experiment over named scenarios. Each scenario is run
// `repetitions` times with seeds derived from the master seed and the best
// repetition is selected (smallest hypervolume gap in compare mode, smallest
// mean normalized objective sum otherwise).
RunReport run_experiment(const std::vector<std::pair<std::string, MissionScenario>>& scenarios,
                         const GaConfig& config, RunMode mode, int repetitions = 10,
                         double oracleBudget = 1e8, int gridCells = 64,
                         const PlanParams& params = {});

// Archive as a comma-separated table: objective-name header, one row per
// solution, full float precision (round-trip exact).
std::string archive_to_csv(const std::vector<ObjectiveVector>& archive, const ObjectiveSelection& sel);
std::vector<std::vector<double>> archive_from_csv(const std::string& text,
                                                  std::vector<std::string>* headerOut = nullptr);

// Writes report.txt plus, per scenario, archive CSVs and (for 2-objective
// compare runs) plot-ready optimal/approximate point series.
// formats: any of "report", "csv", "plot".
std::vector<std::string> emit_outputs(const RunReport& report, const std::string& outDir,
                                      const std::set<std::string>& formats);

}  // namespace uavplan
