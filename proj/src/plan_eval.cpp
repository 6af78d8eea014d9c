#include "uavplan/plan_eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace uavplan {

namespace {

constexpr double kTimeEps = 1e-9;

bool nearly_equal(double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

double min_fuel_ratio(const UavSpec& uav) {
    double r = std::numeric_limits<double>::infinity();
    for (const auto& fp : uav.profiles) r = std::min(r, fp.fuelRatio);
    return r;
}

}  // namespace

const char* to_string(ConstraintFamily f) {
    switch (f) {
        case ConstraintFamily::Sensor: return "Sensor";
        case ConstraintFamily::Order: return "Order";
        case ConstraintFamily::Gcs: return "Gcs";
        case ConstraintFamily::Temporal: return "Temporal";
        case ConstraintFamily::Dependency: return "Dependency";
        case ConstraintFamily::Autonomy: return "Autonomy";
        case ConstraintFamily::Distance: return "Distance";
        case ConstraintFamily::Fuel: return "Fuel";
    }
    return "?";
}

GeoPoint zone_entry(const TaskSpec& task) { return task.zone.front(); }

GeoPoint zone_exit(const TaskSpec& task) {
    if (task.kind == TaskKind::ES) return task.zone.back();
    return task.zone.front();
}

void task_leg_geometry(const TaskSpec& task, const UavSpec& uav, SensorKind sensor, int teamSize,
                       const PlanParams& params, double& distanceTask, double& durTask) {
    const double sensorSpeed = uav.performance(sensor).speed;
    const double given = task.window.has_duration() ? task.window.duration : 0.0;
    switch (task.kind) {
        case TaskKind::MON: {
            durTask = given;
            distanceTask = sensorSpeed * durTask;
            break;
        }
        case TaskKind::ES: {
            const double len = polyline_length_nm(task.zone);
            distanceTask = len;
            durTask = task.window.has_duration() ? given : len / sensorSpeed;
            break;
        }
        case TaskKind::TP: {
            distanceTask = 0.0;
            durTask = given;
            break;
        }
        case TaskKind::MAP: {
            const double sweep = polygon_area_nm2(task.zone) / params.mapSwathNm;
            distanceTask = sweep / teamSize;
            durTask = task.window.has_duration() ? given : sweep / (teamSize * sensorSpeed);
            break;
        }
    }
}

std::optional<UavSchedule> build_uav_schedule(const MissionScenario& sc, const PathPlanner& planner,
                                              const PlanParams& params, int u,
                                              const std::vector<std::pair<int, int>>& seq,
                                              const std::vector<int>& profiles,
                                              const std::vector<SensorKind>& sensors,
                                              int returnProfile, int gcs) {
    UavSchedule su;
    su.uav = u;
    if (seq.empty()) return su;
    const UavSpec& uav = sc.uavs[u];
    su.gcs = gcs;
    su.returnProfile = returnProfile;

    GeoPoint pos = uav.initialPosition;
    double prevEnd = 0.0;
    bool first = true;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const auto [t, slot] = seq[i];
        const TaskSpec& task = sc.tasks[t];
        TaskLeg leg;
        leg.task = t;
        leg.slot = slot;
        leg.order = static_cast<int>(su.legs.size());
        leg.profile = profiles[i];
        leg.sensor = sensors[i];
        const FlightProfile& fp = uav.profiles[leg.profile];

        auto path = planner.plan(pos, zone_entry(task));
        if (!path) return std::nullopt;
        leg.pathWaypoints = path->waypoints;
        AssignmentTimes& at = leg.times;
        at.distancePath = path->lengthNm;
        at.durPath = at.distancePath / fp.speed;
        task_leg_geometry(task, uav, leg.sensor, task.requiredUavCount, params, at.distanceTask,
                          at.durTask);

        if (task.window.mode == WindowMode::Fixed) {
            at.start = task.window.start;
            at.end = task.window.end;
            at.durTask = task.window.duration;
            at.departure = at.start - at.durPath;
            at.durLoiter = first ? 0.0 : at.departure - prevEnd;
        } else {
            at.departure = std::max(prevEnd, 0.0);
            at.start = at.departure + at.durPath;
            at.end = at.start + at.durTask;
            at.durLoiter = 0.0;
        }
        at.fuelPath = at.durPath * fp.fuelRatio;
        at.fuelTask = at.durTask * fp.fuelRatio;
        at.fuelLoiter = at.durLoiter * min_fuel_ratio(uav);
        at.distanceLoiter = 0.0;

        prevEnd = at.end;
        pos = zone_exit(task);
        first = false;
        su.legs.push_back(std::move(leg));
    }

    auto ret = planner.plan(pos, uav.initialPosition);
    if (!ret) return std::nullopt;
    const FlightProfile& rf = uav.profiles[returnProfile];
    su.returnWaypoints = ret->waypoints;
    su.distanceReturn = ret->lengthNm;
    su.durReturn = su.distanceReturn / rf.speed;
    su.returnTime = prevEnd + su.durReturn;
    su.fuelReturn = su.durReturn * rf.fuelRatio;

    for (const auto& leg : su.legs) {
        su.flightTime += leg.times.durPath + leg.times.durTask + leg.times.durLoiter;
        su.totalDistance += leg.times.distancePath + leg.times.distanceTask + leg.times.distanceLoiter;
        su.totalFuel += leg.times.fuelPath + leg.times.fuelTask;
    }
    su.flightTime += su.durReturn;
    su.totalDistance += su.distanceReturn;
    su.totalFuel += su.fuelReturn;
    return su;
}

EvalResult decode(const MissionScenario& sc, const PathPlanner& planner, const Chromosome& c,
                  const PlanParams& params) {
    {
        auto structural = structural_violations(sc, c);
        if (!structural.empty())
            throw std::invalid_argument("decode: structurally invalid chromosome: " + structural.front());
    }

    const int n = static_cast<int>(sc.tasks.size());
    const int m = static_cast<int>(sc.uavs.size());

    // Per-UAV task sequence: the global permutation restricted to the tasks
    // the UAV is assigned to.
    std::vector<std::vector<std::pair<int, int>>> seq(m);  // (task, slot)
    for (int pos = 0; pos < n; ++pos) {
        const int t = c.orderPerm[pos];
        for (std::size_t j = 0; j < c.assignUavs[t].size(); ++j)
            seq[c.assignUavs[t][j]].push_back({t, static_cast<int>(j)});
    }

    DecodedPlan plan;
    plan.uavs.resize(m);
    for (int u = 0; u < m; ++u) {
        std::vector<int> profiles;
        std::vector<SensorKind> sensors;
        for (const auto& [t, slot] : seq[u]) {
            profiles.push_back(c.pathProfile[t][slot]);
            sensors.push_back(c.sensorUsed[t][slot]);
        }
        auto su = build_uav_schedule(sc, planner, params, u, seq[u], profiles, sensors,
                                     c.returnProfile[u], c.gcsOf[u]);
        if (!su) {
            EvalResult res;
            res.report.add(ConstraintFamily::Distance, "NoPath",
                           "no NFZ-avoiding route for " + sc.uavs[u].id);
            return res;
        }
        plan.uavs[u] = std::move(*su);
    }

    EvalResult res;
    res.plan = std::move(plan);
    return res;
}

bool uav_locally_feasible(const MissionScenario& sc, const UavSchedule& su) {
    DecodedPlan single;
    single.uavs.resize(sc.uavs.size());
    for (std::size_t u = 0; u < sc.uavs.size(); ++u) single.uavs[u].uav = static_cast<int>(u);
    single.uavs[su.uav] = su;
    ConstraintReport report;
    check_temporal(sc, single, report);
    check_resources(sc, single, report);
    return report.feasible;
}

bool uav_gcs_admissible(const MissionScenario& sc, const UavSchedule& su, const GcsSpec& gcs) {
    const UavSpec& uav = sc.uavs[su.uav];
    if (!gcs.permittedTypes.count(uav.uavType)) return false;
    auto covered = [&](const GeoPoint& p) {
        return distance_nm(p, gcs.position) <= gcs.coverage + kTimeEps;
    };
    if (!covered(uav.initialPosition)) return false;
    for (const auto& leg : su.legs) {
        for (const auto& wp : leg.pathWaypoints)
            if (!covered(wp)) return false;
        for (const auto& v : sc.tasks[leg.task].zone)
            if (!covered(v)) return false;
    }
    for (const auto& wp : su.returnWaypoints)
        if (!covered(wp)) return false;
    return true;
}

void check_sensors(const MissionScenario& sc, const DecodedPlan& plan, ConstraintReport& report) {
    for (const auto& su : plan.uavs) {
        for (const auto& leg : su.legs) {
            const TaskSpec& task = sc.tasks[leg.task];
            const UavSpec& uav = sc.uavs[su.uav];
            if (valid_task_sensors(task.kind, uav).empty())
                report.add(ConstraintFamily::Sensor, "NoCompatibleSensor",
                           uav.id + " carries no sensor for task " + task.id);
        }
    }
}

void check_order(const MissionScenario&, const DecodedPlan& plan, ConstraintReport& report) {
    for (const auto& su : plan.uavs) {
        std::vector<bool> seen(su.legs.size(), false);
        for (const auto& leg : su.legs) {
            if (leg.order < 0 || leg.order >= static_cast<int>(su.legs.size())) {
                report.add(ConstraintFamily::Order, "OrderRange", "leg order out of range");
            } else if (seen[leg.order]) {
                report.add(ConstraintFamily::Order, "OrderDuplicate", "duplicate leg order");
            } else {
                seen[leg.order] = true;
            }
        }
    }
}

void check_gcs(const MissionScenario& sc, const DecodedPlan& plan, ConstraintReport& report) {
    std::vector<int> load(sc.gcss.size(), 0);
    for (const auto& su : plan.uavs) {
        if (!su.used()) continue;
        const UavSpec& uav = sc.uavs[su.uav];
        const GcsSpec& gcs = sc.gcss[su.gcs];
        ++load[su.gcs];
        if (!gcs.permittedTypes.count(uav.uavType))
            report.add(ConstraintFamily::Gcs, "TypeNotPermitted",
                       gcs.id + " does not control type " + to_string(uav.uavType));
        else if (!uav_gcs_admissible(sc, su, gcs))
            report.add(ConstraintFamily::Gcs, "OutOfCoverage",
                       uav.id + " leaves the coverage of " + gcs.id);
    }
    for (std::size_t g = 0; g < sc.gcss.size(); ++g) {
        if (load[g] >= sc.gcss[g].maxUavs)
            report.add(ConstraintFamily::Gcs, "Capacity",
                       sc.gcss[g].id + " controls too many UAVs");
    }
}

namespace {

// Per-UAV temporal slice; reports only when `report` is given, so the oracle
// can use the exact same comparisons as the fitness gate without paying for
// message construction.
bool temporal_ok(const MissionScenario& sc, const UavSchedule& su, ConstraintReport* report) {
    if (!su.used()) return true;
    const UavSpec& uav = sc.uavs[su.uav];
    bool ok = true;
    auto flag = [&](const char* code, std::string detail) {
        ok = false;
        if (report) report->add(ConstraintFamily::Temporal, code, std::move(detail));
    };
    double prevEnd = 0.0;  // mission clock starts at 0
    for (std::size_t i = 0; i < su.legs.size(); ++i) {
        const AssignmentTimes& at = su.legs[i].times;
        const FlightProfile& fp = uav.profiles[su.legs[i].profile];
        if (at.departure + kTimeEps < prevEnd)
            flag("Overlap", i == 0 ? uav.id + " would have to depart before mission start"
                                   : uav.id + " departs before the previous task ends");
        if (!nearly_equal(at.departure + at.durPath, at.start))
            flag("StartIdentity", "start != departure + durPath");
        if (!nearly_equal(at.start + at.durTask, at.end))
            flag("EndIdentity", "end != start + durTask");
        if (!nearly_equal(at.durPath, at.distancePath / fp.speed))
            flag("PathIdentity", "durPath != distancePath / speed");
        if (i > 0) {
            const double loiter = at.departure - su.legs[i - 1].times.end;
            if (!nearly_equal(at.durLoiter, loiter))
                flag("LoiterIdentity", "durLoiter != departure - previous end");
        }
        prevEnd = at.end;
    }
    const FlightProfile& rf = uav.profiles[su.returnProfile];
    if (!nearly_equal(su.durReturn, su.distanceReturn / rf.speed))
        flag("ReturnIdentity", "durReturn != distanceReturn / speed");
    if (!nearly_equal(su.returnTime, su.legs.back().times.end + su.durReturn))
        flag("ReturnTimeIdentity", "returnTime != last end + durReturn");
    return ok;
}

bool resources_ok(const MissionScenario& sc, const UavSchedule& su, ConstraintReport* report) {
    if (!su.used()) return true;
    const UavSpec& uav = sc.uavs[su.uav];
    bool ok = true;
    if (!(su.flightTime < uav.autonomy)) {
        ok = false;
        if (report)
            report->add(ConstraintFamily::Autonomy, "FlightTime",
                        uav.id + " flight time reaches its autonomy");
    }
    if (!(su.totalDistance < uav.range)) {
        ok = false;
        if (report)
            report->add(ConstraintFamily::Distance, "Range", uav.id + " distance reaches its range");
    }
    if (!(su.totalFuel < uav.initialFuel)) {
        ok = false;
        if (report)
            report->add(ConstraintFamily::Fuel, "Fuel", uav.id + " burns its whole initial fuel");
    }
    return ok;
}

}  // namespace

void check_temporal(const MissionScenario& sc, const DecodedPlan& plan, ConstraintReport& report) {
    for (const auto& su : plan.uavs) temporal_ok(sc, su, &report);
}

namespace {

struct Interval {
    double start, end;
};

// Span of a task across every UAV executing it.
Interval task_interval(const DecodedPlan& plan, int task) {
    Interval iv{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (const auto& su : plan.uavs) {
        for (const auto& leg : su.legs) {
            if (leg.task != task) continue;
            iv.start = std::min(iv.start, leg.times.start);
            iv.end = std::max(iv.end, leg.times.end);
        }
    }
    return iv;
}

bool time_leq(double a, double b) { return a <= b + kTimeEps; }
bool time_eq(double a, double b) { return std::abs(a - b) <= kTimeEps; }

bool allen_holds(DependencyKind k, const Interval& a, const Interval& b) {
    switch (k) {
        case DependencyKind::Before: return time_leq(a.end, b.start);
        case DependencyKind::After: return allen_holds(DependencyKind::Before, b, a);
        case DependencyKind::Meets: return time_eq(a.end, b.start);
        case DependencyKind::MetBy: return allen_holds(DependencyKind::Meets, b, a);
        case DependencyKind::Overlaps:
            return time_leq(a.start, b.start) && time_leq(b.start, a.end) && time_leq(a.end, b.end);
        case DependencyKind::OverlappedBy: return allen_holds(DependencyKind::Overlaps, b, a);
        case DependencyKind::Starts: return time_eq(a.start, b.start) && time_leq(a.end, b.end);
        case DependencyKind::StartedBy: return allen_holds(DependencyKind::Starts, b, a);
        case DependencyKind::During: return time_leq(b.start, a.start) && time_leq(a.end, b.end);
        case DependencyKind::Contains: return allen_holds(DependencyKind::During, b, a);
        case DependencyKind::Finishes: return time_leq(b.start, a.start) && time_eq(a.end, b.end);
        case DependencyKind::FinishedBy: return allen_holds(DependencyKind::Finishes, b, a);
        case DependencyKind::Equals: return time_eq(a.start, b.start) && time_eq(a.end, b.end);
        default: return true;
    }
}

std::vector<int> task_uav_set(const DecodedPlan& plan, int task) {
    std::vector<int> out;
    for (const auto& su : plan.uavs)
        for (const auto& leg : su.legs)
            if (leg.task == task) out.push_back(su.uav);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

void check_dependencies(const MissionScenario& sc, const DecodedPlan& plan, ConstraintReport& report) {
    for (const auto& dep : sc.dependencies) {
        const int i = sc.task_index(dep.first);
        const int j = sc.task_index(dep.second);
        if (is_time_dependency(dep.kind)) {
            if (!allen_holds(dep.kind, task_interval(plan, i), task_interval(plan, j)))
                report.add(ConstraintFamily::Dependency, "TimeRelation",
                           dep.first + " " + to_string(dep.kind) + " " + dep.second + " violated");
        } else {
            const auto si = task_uav_set(plan, i);
            const auto sj = task_uav_set(plan, j);
            if (dep.kind == DependencyKind::SameUav && si != sj)
                report.add(ConstraintFamily::Dependency, "SameUav",
                           dep.first + " and " + dep.second + " must share UAVs");
            if (dep.kind == DependencyKind::DiffUav) {
                std::vector<int> inter;
                std::set_intersection(si.begin(), si.end(), sj.begin(), sj.end(),
                                      std::back_inserter(inter));
                if (!inter.empty())
                    report.add(ConstraintFamily::Dependency, "DiffUav",
                               dep.first + " and " + dep.second + " must use different UAVs");
            }
        }
    }
}

void check_resources(const MissionScenario& sc, const DecodedPlan& plan, ConstraintReport& report) {
    for (const auto& su : plan.uavs) resources_ok(sc, su, &report);
}

EvalResult evaluate(const MissionScenario& sc, const PathPlanner& planner, const Chromosome& c,
                    const PlanParams& params) {
    EvalResult res = decode(sc, planner, c, params);
    if (!res.plan) return res;
    check_sensors(sc, *res.plan, res.report);
    check_order(sc, *res.plan, res.report);
    check_gcs(sc, *res.plan, res.report);
    check_temporal(sc, *res.plan, res.report);
    check_dependencies(sc, *res.plan, res.report);
    check_resources(sc, *res.plan, res.report);
    if (!res.report.feasible) res.plan.reset();
    return res;
}

}  // namespace uavplan
