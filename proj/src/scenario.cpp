#include "uavplan/scenario.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace uavplan {

const char* to_string(SensorKind s) {
    switch (s) {
        case SensorKind::EoirVideo: return "EOIR_VIDEO";
        case SensorKind::EoirThermal: return "EOIR_THERMAL";
        case SensorKind::EoirPlain: return "EOIR";
        case SensorKind::Sar: return "SAR";
        case SensorKind::Isar: return "ISAR";
        case SensorKind::Mpr: return "MPR";
    }
    return "?";
}

const char* to_string(TaskKind k) {
    switch (k) {
        case TaskKind::MON: return "MON";
        case TaskKind::ES: return "ES";
        case TaskKind::TP: return "TP";
        case TaskKind::MAP: return "MAP";
    }
    return "?";
}

const char* to_string(UavType t) {
    switch (t) {
        case UavType::URAV: return "URAV";
        case UavType::MALE: return "MALE";
        case UavType::HALE: return "HALE";
        case UavType::UCAV: return "UCAV";
    }
    return "?";
}

SensorKind sensor_from_string(const std::string& s) {
    if (s == "EOIR_VIDEO") return SensorKind::EoirVideo;
    if (s == "EOIR_THERMAL") return SensorKind::EoirThermal;
    if (s == "EOIR") return SensorKind::EoirPlain;
    if (s == "SAR") return SensorKind::Sar;
    if (s == "ISAR") return SensorKind::Isar;
    if (s == "MPR") return SensorKind::Mpr;
    throw std::invalid_argument("unknown sensor kind: " + s);
}

TaskKind task_kind_from_string(const std::string& s) {
    if (s == "MON") return TaskKind::MON;
    if (s == "ES") return TaskKind::ES;
    if (s == "TP") return TaskKind::TP;
    if (s == "MAP") return TaskKind::MAP;
    throw std::invalid_argument("unknown task kind: " + s);
}

UavType uav_type_from_string(const std::string& s) {
    if (s == "URAV") return UavType::URAV;
    if (s == "MALE") return UavType::MALE;
    if (s == "HALE") return UavType::HALE;
    if (s == "UCAV") return UavType::UCAV;
    throw std::invalid_argument("unknown UAV type: " + s);
}

const char* to_string(DependencyKind k) {
    switch (k) {
        case DependencyKind::Before: return "before";
        case DependencyKind::After: return "after";
        case DependencyKind::Meets: return "meets";
        case DependencyKind::MetBy: return "met-by";
        case DependencyKind::Overlaps: return "overlaps";
        case DependencyKind::OverlappedBy: return "overlapped-by";
        case DependencyKind::Starts: return "starts";
        case DependencyKind::StartedBy: return "started-by";
        case DependencyKind::During: return "during";
        case DependencyKind::Contains: return "contains";
        case DependencyKind::Finishes: return "finishes";
        case DependencyKind::FinishedBy: return "finished-by";
        case DependencyKind::Equals: return "equals";
        case DependencyKind::SameUav: return "same-uav";
        case DependencyKind::DiffUav: return "diff-uav";
    }
    return "?";
}

DependencyKind dependency_from_string(const std::string& s) {
    static const std::unordered_map<std::string, DependencyKind> table = {
        {"before", DependencyKind::Before},       {"after", DependencyKind::After},
        {"meets", DependencyKind::Meets},         {"met-by", DependencyKind::MetBy},
        {"overlaps", DependencyKind::Overlaps},   {"overlapped-by", DependencyKind::OverlappedBy},
        {"starts", DependencyKind::Starts},       {"started-by", DependencyKind::StartedBy},
        {"during", DependencyKind::During},       {"contains", DependencyKind::Contains},
        {"finishes", DependencyKind::Finishes},   {"finished-by", DependencyKind::FinishedBy},
        {"equals", DependencyKind::Equals},       {"same-uav", DependencyKind::SameUav},
        {"diff-uav", DependencyKind::DiffUav},
    };
    auto it = table.find(s);
    if (it == table.end()) throw std::invalid_argument("unknown dependency relation: " + s);
    return it->second;
}

bool is_time_dependency(DependencyKind k) {
    return k != DependencyKind::SameUav && k != DependencyKind::DiffUav;
}

const SensorPerformance& UavSpec::performance(SensorKind s) const {
    auto it = sensorPerformance.find(s);
    if (it == sensorPerformance.end())
        throw std::out_of_range("no performance entry for sensor on UAV " + id);
    return it->second;
}

int MissionScenario::task_index(const std::string& id) const {
    for (std::size_t i = 0; i < tasks.size(); ++i)
        if (tasks[i].id == id) return static_cast<int>(i);
    return -1;
}

std::set<SensorKind> task_sensor_set(TaskKind kind) {
    switch (kind) {
        case TaskKind::MON: return {SensorKind::EoirVideo, SensorKind::Isar};
        case TaskKind::ES: return {SensorKind::EoirThermal, SensorKind::Sar};
        case TaskKind::TP: return {SensorKind::EoirPlain};
        case TaskKind::MAP: return {SensorKind::Sar, SensorKind::Isar, SensorKind::Mpr};
    }
    return {};
}

std::set<SensorKind> effective_sensors(const UavSpec& uav) {
    std::set<SensorKind> out = uav.sensors;
    if (uav.sensors.count(SensorKind::EoirPlain)) {
        out.insert(SensorKind::EoirVideo);
        out.insert(SensorKind::EoirThermal);
    }
    if (uav.sensors.count(SensorKind::EoirVideo) || uav.sensors.count(SensorKind::EoirThermal)) {
        out.insert(SensorKind::EoirPlain);
    }
    return out;
}

std::set<SensorKind> valid_task_sensors(TaskKind kind, const UavSpec& uav) {
    std::set<SensorKind> out;
    const auto eff = effective_sensors(uav);
    for (SensorKind s : task_sensor_set(kind))
        if (eff.count(s)) out.insert(s);
    return out;
}

namespace {

struct TypeDefaults {
    double range, autonomy, cost, maxSpeed, maxAltitude, maxFuel;
    std::set<SensorKind> sensors;
};

const TypeDefaults& type_defaults(UavType t) {
    static const TypeDefaults urav{1000, 20, 5, 120, 20000, 500,
                                   {SensorKind::EoirVideo, SensorKind::EoirThermal}};
    static const TypeDefaults male{5000, 30, 10, 250, 40000, 2500,
                                   {SensorKind::EoirPlain, SensorKind::Mpr}};
    static const TypeDefaults hale{15000, 40, 15, 400, 65000, 6000,
                                   {SensorKind::EoirVideo, SensorKind::Isar}};
    static const TypeDefaults ucav{1500, 15, 25, 450, 35000, 9000,
                                   {SensorKind::EoirPlain, SensorKind::Sar}};
    switch (t) {
        case UavType::URAV: return urav;
        case UavType::MALE: return male;
        case UavType::HALE: return hale;
        case UavType::UCAV: return ucav;
    }
    return urav;
}

}  // namespace

UavSpec catalog_uav(UavType type, const std::string& id, const GeoPoint& position,
                    std::optional<double> initialFuel) {
    const TypeDefaults& d = type_defaults(type);
    UavSpec u;
    u.id = id;
    u.uavType = type;
    u.initialPosition = position;
    u.sensors = d.sensors;
    u.range = d.range;
    u.autonomy = d.autonomy;
    u.costPerHour = d.cost;
    u.maxSpeed = d.maxSpeed;
    u.maxAltitude = d.maxAltitude;
    u.maxFuel = d.maxFuel;
    u.initialFuel = initialFuel.value_or(d.maxFuel);

    FlightProfile slow;
    slow.id = "min-consumption";
    slow.kind = ProfileKind::Route;
    slow.speed = 0.6 * d.maxSpeed;
    slow.fuelRatio = d.maxFuel / (1.1 * d.autonomy);
    slow.altitude = 0.8 * d.maxAltitude;
    FlightProfile fast;
    fast.id = "max-speed";
    fast.kind = ProfileKind::Route;
    fast.speed = d.maxSpeed;
    fast.fuelRatio = d.maxFuel / (0.55 * d.autonomy);
    fast.altitude = 0.8 * d.maxAltitude;
    u.profiles = {slow, fast};

    for (SensorKind s : {SensorKind::EoirVideo, SensorKind::EoirThermal, SensorKind::EoirPlain,
                         SensorKind::Sar, SensorKind::Isar, SensorKind::Mpr}) {
        u.sensorPerformance[s] = SensorPerformance{0.5 * d.maxSpeed, 0.5 * d.maxAltitude};
    }
    return u;
}

UavSpec catalog_uav(const std::string& typeToken, const std::string& id, const GeoPoint& position,
                    std::optional<double> initialFuel) {
    return catalog_uav(uav_type_from_string(typeToken), id, position, initialFuel);
}

namespace {

bool valid_geo(const GeoPoint& p) {
    return std::isfinite(p.lon) && std::isfinite(p.lat) && std::isfinite(p.alt) &&
           p.lon >= -180.0 && p.lon <= 180.0 && p.lat >= -90.0 && p.lat <= 90.0 && p.alt >= 0.0;
}

void check_points(std::vector<Violation>& out, const std::string& subject,
                  const std::vector<GeoPoint>& pts, const Region& region) {
    for (const auto& p : pts) {
        if (!valid_geo(p)) {
            out.push_back({"bad-coordinates", subject, "coordinate out of range"});
            return;
        }
        if (!region.contains(p)) {
            out.push_back({"outside-region", subject, "point lies outside the scenario region"});
            return;
        }
    }
}

}  // namespace

std::vector<Violation> validate_scenario(const MissionScenario& sc) {
    std::vector<Violation> out;
    const double eps = 1e-9;

    if (sc.tasks.empty()) out.push_back({"no-tasks", "", "scenario needs at least one task"});
    if (sc.uavs.empty()) out.push_back({"no-uavs", "", "scenario needs at least one UAV"});
    if (sc.gcss.empty()) out.push_back({"no-gcss", "", "scenario needs at least one GCS"});

    std::unordered_set<std::string> ids;
    auto check_id = [&](const std::string& id, const char* what) {
        if (!ids.insert(id).second)
            out.push_back({"duplicate-id", id, std::string("duplicate ") + what + " id"});
    };
    for (const auto& t : sc.tasks) check_id(t.id, "task");
    for (const auto& u : sc.uavs) check_id(u.id, "uav");
    for (const auto& g : sc.gcss) check_id(g.id, "gcs");
    for (const auto& z : sc.nfzs) check_id(z.id, "nfz");

    for (const auto& t : sc.tasks) {
        if (t.multiUav && t.kind != TaskKind::MAP)
            out.push_back({"multiuav-only-map", t.id, "multiUav only for MAP tasks"});
        if (!t.multiUav && t.requiredUavCount != 1)
            out.push_back({"uav-count-single", t.id, "requiredUavCount must be 1 for single-UAV tasks"});
        if (t.requiredUavCount < 1)
            out.push_back({"uav-count-positive", t.id, "requiredUavCount must be >= 1"});
        if (t.requiredUavCount > static_cast<int>(sc.uavs.size()))
            out.push_back({"uav-count-exceeds-fleet", t.id, "requiredUavCount exceeds fleet size"});
        switch (t.kind) {
            case TaskKind::TP:
                if (t.zone.size() != 1)
                    out.push_back({"zone-shape", t.id, "TP zone must be a single point"});
                break;
            case TaskKind::ES:
                if (t.zone.size() < 2)
                    out.push_back({"zone-shape", t.id, "ES zone must be a polyline of >= 2 points"});
                break;
            case TaskKind::MON:
            case TaskKind::MAP:
                if (t.zone.size() < 3)
                    out.push_back({"zone-shape", t.id, "zone must be a polygon of >= 3 points"});
                break;
        }
        switch (t.window.mode) {
            case WindowMode::Fixed:
                if (!(t.window.duration > 0.0) ||
                    std::abs(t.window.end - t.window.start - t.window.duration) > eps)
                    out.push_back({"bad-window", t.id, "fixed window needs end - start = duration > 0"});
                break;
            case WindowMode::DurationOnly:
                if (!(t.window.duration > 0.0))
                    out.push_back({"bad-window", t.id, "duration must be > 0"});
                break;
            case WindowMode::Free:
                if (t.kind == TaskKind::MON)
                    out.push_back({"mon-needs-duration", t.id, "MON tasks need a given duration"});
                break;
        }
        check_points(out, t.id, t.zone, sc.region);
        if (task_sensor_set(t.kind).empty())
            out.push_back({"no-sensors", t.id, "task kind has no compatible sensors"});
    }

    for (const auto& u : sc.uavs) {
        if (u.initialFuel > u.maxFuel + eps)
            out.push_back({"fuel-exceeds-max", u.id, "initialFuel exceeds maxFuel"});
        if (u.profiles.empty())
            out.push_back({"no-profiles", u.id, "UAV needs at least one flight profile"});
        if (!(u.range > 0) || !(u.autonomy > 0) || !(u.costPerHour > 0) || !(u.maxSpeed > 0) ||
            !(u.maxAltitude > 0) || !(u.maxFuel > 0) || !(u.initialFuel > 0))
            out.push_back({"non-positive-field", u.id, "UAV numeric fields must be positive"});
        for (const auto& fp : u.profiles) {
            if (!(fp.speed > 0) || !(fp.fuelRatio > 0))
                out.push_back({"bad-profile", u.id, "profile speed and fuelRatio must be positive"});
            if (fp.speed > u.maxSpeed + eps)
                out.push_back({"profile-speed", u.id, "profile speed exceeds UAV max speed"});
            if (fp.kind == ProfileKind::Route && fp.altitude > u.maxAltitude + eps)
                out.push_back({"profile-altitude", u.id, "profile altitude exceeds UAV max altitude"});
        }
        check_points(out, u.id, {u.initialPosition}, sc.region);
    }

    for (const auto& g : sc.gcss) {
        if (g.maxUavs < 1) out.push_back({"bad-gcs-capacity", g.id, "maxUavs must be >= 1"});
        if (g.permittedTypes.empty())
            out.push_back({"no-permitted-types", g.id, "GCS must permit at least one UAV type"});
        if (!(g.coverage > 0)) out.push_back({"bad-coverage", g.id, "coverage must be > 0"});
        check_points(out, g.id, {g.position}, sc.region);
    }

    for (const auto& z : sc.nfzs) {
        if (z.polygon.size() < 3)
            out.push_back({"bad-nfz", z.id, "NFZ polygon needs >= 3 vertices"});
        else if (!polygon_is_simple(z.polygon))
            out.push_back({"nfz-not-simple", z.id, "NFZ polygon must be simple"});
        for (const auto& p : z.polygon)
            if (!valid_geo(p)) {
                out.push_back({"bad-coordinates", z.id, "coordinate out of range"});
                break;
            }
    }

    for (const auto& d : sc.dependencies) {
        if (d.first == d.second)
            out.push_back({"self-dependency", d.first, "dependency endpoints must differ"});
        if (sc.task_index(d.first) < 0)
            out.push_back({"unknown-task", d.first, "dependency references unknown task"});
        if (sc.task_index(d.second) < 0)
            out.push_back({"unknown-task", d.second, "dependency references unknown task"});
    }

    return out;
}

}  // namespace uavplan
