#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uavplan/chromosome.hpp"
#include "uavplan/grid.hpp"
#include "uavplan/scenario.hpp"

namespace uavplan {

// Tunables the task-internal geometry model exposes.
struct PlanParams {
    double mapSwathNm = 1.0;    // boustrophedon swath for MAP sweep length
    double monRadiusNm = 2.0;   // nominal loiter-circle radius for MON
};

// Every time, fuel and distance quantity attached to one (task, UAV) leg.
struct AssignmentTimes {
    double departure = 0.0;
    double durPath = 0.0;
    double start = 0.0;
    double durTask = 0.0;
    double end = 0.0;
    double durLoiter = 0.0;
    double fuelPath = 0.0;
    double fuelTask = 0.0;
    double fuelLoiter = 0.0;
    double distancePath = 0.0;
    double distanceTask = 0.0;
    double distanceLoiter = 0.0;
};

struct TaskLeg {
    int task = -1;        // task index in the scenario
    int slot = -1;        // position in the task's assigned-UAV vector
    int order = -1;       // position in the UAV's sequence
    int profile = -1;     // allele-4 profile index
    SensorKind sensor = SensorKind::EoirPlain;
    AssignmentTimes times;
    std::vector<GeoPoint> pathWaypoints;  // approach path, incl. both endpoints
};

struct UavSchedule {
    int uav = -1;
    int gcs = -1;  // -1 for UAVs flying no task
    int returnProfile = -1;
    std::vector<TaskLeg> legs;  // sorted by sequence order
    double durReturn = 0.0;
    double returnTime = 0.0;
    double fuelReturn = 0.0;
    double distanceReturn = 0.0;
    std::vector<GeoPoint> returnWaypoints;
    double flightTime = 0.0;
    double totalDistance = 0.0;
    double totalFuel = 0.0;

    bool used() const { return !legs.empty(); }
};

struct DecodedPlan {
    std::vector<UavSchedule> uavs;  // indexed by UAV
};

enum class ConstraintFamily { Sensor, Order, Gcs, Temporal, Dependency, Autonomy, Distance, Fuel };

const char* to_string(ConstraintFamily f);

struct ConstraintViolation {
    ConstraintFamily family;
    std::string code;
    std::string detail;
};

struct ConstraintReport {
    bool feasible = true;
    std::vector<ConstraintViolation> violations;

    void add(ConstraintFamily f, std::string code, std::string detail) {
        feasible = false;
        violations.push_back({f, std::move(code), std::move(detail)});
    }
};

struct EvalResult {
    ConstraintReport report;
    std::optional<DecodedPlan> plan;  // present iff decode succeeded
};

// Entry and exit points of a task's zone, as flown.
GeoPoint zone_entry(const TaskSpec& task);
GeoPoint zone_exit(const TaskSpec& task);

// Task-internal distance and duration for one participant of a k-UAV team.
// MON holds at sensor speed for the given duration; ES flies its polyline;
// TP is instantaneous; MAP splits a boustrophedon sweep of the polygon.
void task_leg_geometry(const TaskSpec& task, const UavSpec& uav, SensorKind sensor, int teamSize,
                       const PlanParams& params, double& distanceTask, double& durTask);

// One UAV's schedule from an explicit leg sequence. Shared by decode() and
// the exact oracle so their arithmetic can never diverge. Returns nullopt
// when some leg (or the return) has no NFZ-avoiding route.
std::optional<UavSchedule> build_uav_schedule(const MissionScenario& scenario,
                                              const PathPlanner& planner, const PlanParams& params,
                                              int uav, const std::vector<std::pair<int, int>>& seq,
                                              const std::vector<int>& profiles,
                                              const std::vector<SensorKind>& sensors,
                                              int returnProfile, int gcs);

// Per-UAV slice of the temporal and resource checks (no cross-UAV families).
bool uav_locally_feasible(const MissionScenario& scenario, const UavSchedule& schedule);

// Type and coverage admissibility of one UAV schedule under one GCS
// (capacity is a population property, not per-UAV).
bool uav_gcs_admissible(const MissionScenario& scenario, const UavSchedule& schedule,
                        const GcsSpec& gcs);

// Builds the full per-UAV schedule for a structurally valid chromosome.
// Fails (report with NoPath) only when some leg has no NFZ-avoiding route;
// every other problem is left to the constraint checks.
EvalResult decode(const MissionScenario& scenario, const PathPlanner& planner, const Chromosome& c,
                  const PlanParams& params = {});

void check_sensors(const MissionScenario& sc, const DecodedPlan& plan, ConstraintReport& report);
void check_order(const MissionScenario& sc, const DecodedPlan& plan, ConstraintReport& report);
void check_gcs(const MissionScenario& sc, const DecodedPlan& plan, ConstraintReport& report);
void check_temporal(const MissionScenario& sc, const DecodedPlan& plan, ConstraintReport& report);
void check_dependencies(const MissionScenario& sc, const DecodedPlan& plan, ConstraintReport& report);
void check_resources(const MissionScenario& sc, const DecodedPlan& plan, ConstraintReport& report);

// Two-phase fitness gate: decode, then every constraint family. The plan is
// returned only when the report is feasible.
EvalResult evaluate(const MissionScenario& scenario, const PathPlanner& planner, const Chromosome& c,
                    const PlanParams& params = {});

}  // namespace uavplan
