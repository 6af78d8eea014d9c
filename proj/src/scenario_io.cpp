#include "uavplan/scenario_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace uavplan {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw std::runtime_error("scenario: " + where + ": " + what);
}

void reject_unknown(const json& j, const std::string& where, std::initializer_list<const char*> keys) {
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool known = false;
        for (const char* k : keys) known = known || key == k;
        if (!known) fail(where, "unknown field '" + key + "'");
    }
}

const json& require(const json& j, const std::string& where, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
    return *it;
}

double number(const json& j, const std::string& where, const char* key) {
    const json& v = require(j, where, key);
    if (!v.is_number()) fail(where, std::string("'") + key + "' must be a number");
    return v.get<double>();
}

std::string text(const json& j, const std::string& where, const char* key) {
    const json& v = require(j, where, key);
    if (!v.is_string()) fail(where, std::string("'") + key + "' must be a string");
    return v.get<std::string>();
}

GeoPoint point_from(const json& j, const std::string& where) {
    if (!j.is_object()) fail(where, "point must be an object");
    reject_unknown(j, where, {"lon", "lat", "alt"});
    GeoPoint p;
    p.lon = number(j, where, "lon");
    p.lat = number(j, where, "lat");
    p.alt = j.contains("alt") ? number(j, where, "alt") : 0.0;
    return p;
}

json point_to(const GeoPoint& p) { return json{{"lon", p.lon}, {"lat", p.lat}, {"alt", p.alt}}; }

std::vector<GeoPoint> points_from(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of points");
    std::vector<GeoPoint> out;
    for (const auto& e : j) out.push_back(point_from(e, where));
    return out;
}

TimeWindow window_from(const json& j, const std::string& where) {
    reject_unknown(j, where, {"mode", "start", "end", "duration"});
    TimeWindow w;
    const std::string mode = text(j, where, "mode");
    if (mode == "fixed") {
        w.mode = WindowMode::Fixed;
        w.start = number(j, where, "start");
        w.end = number(j, where, "end");
        w.duration = j.contains("duration") ? number(j, where, "duration") : w.end - w.start;
    } else if (mode == "duration") {
        w.mode = WindowMode::DurationOnly;
        w.duration = number(j, where, "duration");
        if (j.contains("start") || j.contains("end"))
            fail(where, "duration-only window cannot carry start/end");
    } else if (mode == "free") {
        w.mode = WindowMode::Free;
        if (j.contains("start") || j.contains("end") || j.contains("duration"))
            fail(where, "free window cannot carry times");
    } else {
        fail(where, "unknown window mode '" + mode + "'");
    }
    return w;
}

json window_to(const TimeWindow& w) {
    switch (w.mode) {
        case WindowMode::Fixed:
            return json{{"mode", "fixed"}, {"start", w.start}, {"end", w.end}, {"duration", w.duration}};
        case WindowMode::DurationOnly:
            return json{{"mode", "duration"}, {"duration", w.duration}};
        case WindowMode::Free:
            return json{{"mode", "free"}};
    }
    return {};
}

TaskSpec task_from(const json& j, const std::string& where) {
    reject_unknown(j, where, {"id", "kind", "zone", "window", "multiUav", "requiredUavCount"});
    TaskSpec t;
    t.id = text(j, where, "id");
    t.kind = task_kind_from_string(text(j, where, "kind"));
    t.zone = points_from(require(j, where, "zone"), where + ".zone");
    t.window = window_from(require(j, where, "window"), where + ".window");
    t.multiUav = j.contains("multiUav") ? require(j, where, "multiUav").get<bool>() : false;
    t.requiredUavCount = j.contains("requiredUavCount")
                             ? require(j, where, "requiredUavCount").get<int>()
                             : (t.multiUav ? 2 : 1);
    return t;
}

json task_to(const TaskSpec& t) {
    json zone = json::array();
    for (const auto& p : t.zone) zone.push_back(point_to(p));
    return json{{"id", t.id},           {"kind", to_string(t.kind)},
                {"zone", zone},         {"window", window_to(t.window)},
                {"multiUav", t.multiUav}, {"requiredUavCount", t.requiredUavCount}};
}

FlightProfile profile_from(const json& j, const std::string& where) {
    reject_unknown(j, where, {"id", "kind", "speed", "fuelRatio", "altitude", "angle"});
    FlightProfile fp;
    fp.id = text(j, where, "id");
    const std::string kind = text(j, where, "kind");
    if (kind == "route") fp.kind = ProfileKind::Route;
    else if (kind == "climb") fp.kind = ProfileKind::Climb;
    else if (kind == "descent") fp.kind = ProfileKind::Descent;
    else fail(where, "unknown profile kind '" + kind + "'");
    fp.speed = number(j, where, "speed");
    fp.fuelRatio = number(j, where, "fuelRatio");
    fp.altitude = j.contains("altitude") ? number(j, where, "altitude") : 0.0;
    fp.angle = j.contains("angle") ? number(j, where, "angle") : 0.0;
    return fp;
}

json profile_to(const FlightProfile& fp) {
    const char* kind = fp.kind == ProfileKind::Route ? "route"
                       : fp.kind == ProfileKind::Climb ? "climb" : "descent";
    return json{{"id", fp.id},           {"kind", kind},
                {"speed", fp.speed},     {"fuelRatio", fp.fuelRatio},
                {"altitude", fp.altitude}, {"angle", fp.angle}};
}

UavSpec uav_from(const json& j, const std::string& where) {
    reject_unknown(j, where,
                   {"id", "type", "position", "initialFuel", "sensors", "range", "autonomy",
                    "costPerHour", "maxSpeed", "maxAltitude", "maxFuel", "profiles",
                    "sensorPerformance"});
    const std::string id = text(j, where, "id");
    const UavType type = uav_type_from_string(text(j, where, "type"));
    const GeoPoint pos = point_from(require(j, where, "position"), where + ".position");
    UavSpec u = catalog_uav(type, id, pos);

    if (j.contains("maxFuel")) u.maxFuel = number(j, where, "maxFuel");
    u.initialFuel = j.contains("initialFuel") ? number(j, where, "initialFuel") : u.maxFuel;
    if (j.contains("range")) u.range = number(j, where, "range");
    if (j.contains("autonomy")) u.autonomy = number(j, where, "autonomy");
    if (j.contains("costPerHour")) u.costPerHour = number(j, where, "costPerHour");
    if (j.contains("maxSpeed")) u.maxSpeed = number(j, where, "maxSpeed");
    if (j.contains("maxAltitude")) u.maxAltitude = number(j, where, "maxAltitude");
    if (j.contains("sensors")) {
        u.sensors.clear();
        for (const auto& s : require(j, where, "sensors"))
            u.sensors.insert(sensor_from_string(s.get<std::string>()));
    }
    if (j.contains("profiles")) {
        u.profiles.clear();
        for (const auto& p : require(j, where, "profiles"))
            u.profiles.push_back(profile_from(p, where + ".profiles"));
    }
    if (j.contains("sensorPerformance")) {
        for (const auto& [key, val] : require(j, where, "sensorPerformance").items()) {
            reject_unknown(val, where + ".sensorPerformance", {"speed", "altitude"});
            SensorPerformance perf;
            perf.speed = number(val, where, "speed");
            perf.altitude = number(val, where, "altitude");
            u.sensorPerformance[sensor_from_string(key)] = perf;
        }
    }
    return u;
}

json uav_to(const UavSpec& u) {
    json sensors = json::array();
    for (SensorKind s : u.sensors) sensors.push_back(to_string(s));
    json profiles = json::array();
    for (const auto& fp : u.profiles) profiles.push_back(profile_to(fp));
    json perf = json::object();
    for (const auto& [s, p] : u.sensorPerformance)
        perf[to_string(s)] = json{{"speed", p.speed}, {"altitude", p.altitude}};
    return json{{"id", u.id},
                {"type", to_string(u.uavType)},
                {"position", point_to(u.initialPosition)},
                {"initialFuel", u.initialFuel},
                {"sensors", sensors},
                {"range", u.range},
                {"autonomy", u.autonomy},
                {"costPerHour", u.costPerHour},
                {"maxSpeed", u.maxSpeed},
                {"maxAltitude", u.maxAltitude},
                {"maxFuel", u.maxFuel},
                {"profiles", profiles},
                {"sensorPerformance", perf}};
}

GcsSpec gcs_from(const json& j, const std::string& where) {
    reject_unknown(j, where, {"id", "position", "maxUavs", "permittedTypes", "coverage"});
    GcsSpec g;
    g.id = text(j, where, "id");
    g.position = point_from(require(j, where, "position"), where + ".position");
    g.maxUavs = require(j, where, "maxUavs").get<int>();
    for (const auto& t : require(j, where, "permittedTypes"))
        g.permittedTypes.insert(uav_type_from_string(t.get<std::string>()));
    g.coverage = number(j, where, "coverage");
    return g;
}

json gcs_to(const GcsSpec& g) {
    json types = json::array();
    for (UavType t : g.permittedTypes) types.push_back(to_string(t));
    return json{{"id", g.id},
                {"position", point_to(g.position)},
                {"maxUavs", g.maxUavs},
                {"permittedTypes", types},
                {"coverage", g.coverage}};
}

}  // namespace

std::string scenario_to_string(const MissionScenario& sc) {
    json j;
    j["region"] = json{{"min", point_to(sc.region.min)}, {"max", point_to(sc.region.max)}};
    j["tasks"] = json::array();
    for (const auto& t : sc.tasks) j["tasks"].push_back(task_to(t));
    j["uavs"] = json::array();
    for (const auto& u : sc.uavs) j["uavs"].push_back(uav_to(u));
    j["gcss"] = json::array();
    for (const auto& g : sc.gcss) j["gcss"].push_back(gcs_to(g));
    j["nfzs"] = json::array();
    for (const auto& z : sc.nfzs) {
        json poly = json::array();
        for (const auto& p : z.polygon) poly.push_back(point_to(p));
        j["nfzs"].push_back(json{{"id", z.id}, {"polygon", poly}});
    }
    j["dependencies"] = json::array();
    for (const auto& d : sc.dependencies)
        j["dependencies"].push_back(
            json{{"kind", to_string(d.kind)}, {"first", d.first}, {"second", d.second}});
    return j.dump(2) + "\n";
}

MissionScenario scenario_from_string(const std::string& textContent) {
    json j;
    try {
        j = json::parse(textContent);
    } catch (const json::parse_error& e) {
        fail("parse", e.what());
    }
    reject_unknown(j, "top-level", {"region", "tasks", "uavs", "gcss", "nfzs", "dependencies"});
    MissionScenario sc;
    const json& region = require(j, "top-level", "region");
    reject_unknown(region, "region", {"min", "max"});
    sc.region.min = point_from(require(region, "region", "min"), "region.min");
    sc.region.max = point_from(require(region, "region", "max"), "region.max");
    int idx = 0;
    for (const auto& t : require(j, "top-level", "tasks"))
        sc.tasks.push_back(task_from(t, "tasks[" + std::to_string(idx++) + "]"));
    idx = 0;
    for (const auto& u : require(j, "top-level", "uavs"))
        sc.uavs.push_back(uav_from(u, "uavs[" + std::to_string(idx++) + "]"));
    idx = 0;
    for (const auto& g : require(j, "top-level", "gcss"))
        sc.gcss.push_back(gcs_from(g, "gcss[" + std::to_string(idx++) + "]"));
    if (j.contains("nfzs")) {
        idx = 0;
        for (const auto& z : j["nfzs"]) {
            const std::string where = "nfzs[" + std::to_string(idx++) + "]";
            reject_unknown(z, where, {"id", "polygon"});
            NoFlyZone nfz;
            nfz.id = text(z, where, "id");
            nfz.polygon = points_from(require(z, where, "polygon"), where + ".polygon");
            sc.nfzs.push_back(std::move(nfz));
        }
    }
    if (j.contains("dependencies")) {
        idx = 0;
        for (const auto& d : j["dependencies"]) {
            const std::string where = "dependencies[" + std::to_string(idx++) + "]";
            reject_unknown(d, where, {"kind", "first", "second"});
            Dependency dep;
            dep.kind = dependency_from_string(text(d, where, "kind"));
            dep.first = text(d, where, "first");
            dep.second = text(d, where, "second");
            sc.dependencies.push_back(std::move(dep));
        }
    }
    return sc;
}

MissionScenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return scenario_from_string(ss.str());
}

void save_scenario(const MissionScenario& sc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write scenario file: " + path);
    out << scenario_to_string(sc);
}

}  // namespace uavplan
