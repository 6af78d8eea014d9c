#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "uavplan/geo.hpp"

namespace uavplan {

enum class SensorKind { EoirVideo, EoirThermal, EoirPlain, Sar, Isar, Mpr };
enum class TaskKind { MON, ES, TP, MAP };
enum class UavType { URAV, MALE, HALE, UCAV };
enum class WindowMode { Fixed, DurationOnly, Free };
enum class ProfileKind { Route, Climb, Descent };

const char* to_string(SensorKind s);
const char* to_string(TaskKind k);
const char* to_string(UavType t);
SensorKind sensor_from_string(const std::string& s);
TaskKind task_kind_from_string(const std::string& s);
UavType uav_type_from_string(const std::string& s);

// Task time window. Fixed carries start/end/duration (hours), DurationOnly
// just the duration, Free nothing.
struct TimeWindow {
    WindowMode mode = WindowMode::Free;
    double start = 0.0;
    double end = 0.0;
    double duration = 0.0;

    bool has_duration() const { return mode != WindowMode::Free; }
    bool operator==(const TimeWindow&) const = default;
};

struct TaskSpec {
    std::string id;
    TaskKind kind = TaskKind::TP;
    std::vector<GeoPoint> zone;  // point (TP), polyline (ES), polygon (MON/MAP)
    TimeWindow window;
    bool multiUav = false;
    int requiredUavCount = 1;

    bool operator==(const TaskSpec&) const = default;
};

struct FlightProfile {
    std::string id;
    ProfileKind kind = ProfileKind::Route;
    double speed = 0.0;      // knots
    double fuelRatio = 0.0;  // kg/hour
    double altitude = 0.0;   // feet, Route profiles
    double angle = 0.0;      // degrees, Climb/Descent profiles

    bool operator==(const FlightProfile&) const = default;
};

// Optimum operating point of a sensor while executing a task.
struct SensorPerformance {
    double speed = 0.0;     // knots
    double altitude = 0.0;  // feet

    bool operator==(const SensorPerformance&) const = default;
};

struct UavSpec {
    std::string id;
    UavType uavType = UavType::URAV;
    GeoPoint initialPosition;
    double initialFuel = 0.0;  // kg
    std::set<SensorKind> sensors;
    double range = 0.0;       // NM
    double autonomy = 0.0;    // hours
    double costPerHour = 0.0;
    double maxSpeed = 0.0;    // knots
    double maxAltitude = 0.0; // feet
    double maxFuel = 0.0;     // kg
    std::vector<FlightProfile> profiles;
    std::map<SensorKind, SensorPerformance> sensorPerformance;

    const SensorPerformance& performance(SensorKind s) const;

    bool operator==(const UavSpec&) const = default;
};

struct GcsSpec {
    std::string id;
    GeoPoint position;
    int maxUavs = 1;
    std::set<UavType> permittedTypes;
    double coverage = 0.0;  // NM

    bool operator==(const GcsSpec&) const = default;
};

// Allen interval relations plus both vehicle dependencies.
enum class DependencyKind {
    Before, After, Meets, MetBy, Overlaps, OverlappedBy,
    Starts, StartedBy, During, Contains, Finishes, FinishedBy, Equals,
    SameUav, DiffUav,
};

const char* to_string(DependencyKind k);
DependencyKind dependency_from_string(const std::string& s);
bool is_time_dependency(DependencyKind k);

struct Dependency {
    DependencyKind kind = DependencyKind::Before;
    std::string first;
    std::string second;

    bool operator==(const Dependency&) const = default;
};

struct NoFlyZone {
    std::string id;
    std::vector<GeoPoint> polygon;  // >= 3 vertices, simple

    bool operator==(const NoFlyZone&) const = default;
};

struct Region {
    GeoPoint min;
    GeoPoint max;

    bool contains(const GeoPoint& p) const {
        return p.lon >= min.lon && p.lon <= max.lon && p.lat >= min.lat && p.lat <= max.lat;
    }
    bool operator==(const Region&) const = default;
};

// Immutable problem instance. Construct, validate once, then share freely.
struct MissionScenario {
    std::vector<TaskSpec> tasks;
    std::vector<UavSpec> uavs;
    std::vector<GcsSpec> gcss;
    std::vector<NoFlyZone> nfzs;
    std::vector<Dependency> dependencies;
    Region region;

    int task_index(const std::string& id) const;  // -1 when absent
    bool operator==(const MissionScenario&) const = default;
};

struct Violation {
    std::string code;     // machine-readable, e.g. "duplicate-id"
    std::string subject;  // offending entity id, may be empty
    std::string message;
};

std::vector<Violation> validate_scenario(const MissionScenario& scenario);

// Table-driven compatibility between task kinds and sensors.
std::set<SensorKind> task_sensor_set(TaskKind kind);

// Sensors a UAV can stand in for, expanding the EO/IR subsumption rules:
// a plain EO/IR covers the video and thermal variants and vice versa.
std::set<SensorKind> effective_sensors(const UavSpec& uav);

// Task-required sensor kinds this UAV can provide for the given task kind.
std::set<SensorKind> valid_task_sensors(TaskKind kind, const UavSpec& uav);

inline bool uav_compatible(TaskKind kind, const UavSpec& uav) {
    return !valid_task_sensors(kind, uav).empty();
}

// UavSpec with catalog defaults for the type: performance envelope, the two
// default Route profiles ("min-consumption", "max-speed") and per-sensor
// optimum operating points. Initial fuel defaults to the full tank.
UavSpec catalog_uav(UavType type, const std::string& id, const GeoPoint& position,
                    std::optional<double> initialFuel = std::nullopt);
UavSpec catalog_uav(const std::string& typeToken, const std::string& id, const GeoPoint& position,
                    std::optional<double> initialFuel = std::nullopt);

}  // namespace uavplan
