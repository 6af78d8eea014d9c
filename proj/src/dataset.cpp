#include "uavplan/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "uavplan/grid.hpp"
#include "uavplan/nsga.hpp"
#include "uavplan/oracle.hpp"
#include "uavplan/plan_eval.hpp"
#include "uavplan/rng.hpp"

namespace uavplan {

int DatasetRecipe::task_count() const {
    int n = 0;
    for (const auto& [kind, count] : taskMix) n += count;
    return n;
}

int DatasetRecipe::uav_count() const {
    int m = 0;
    for (const auto& [type, count] : uavMix) m += count;
    return m;
}

DatasetRecipe builtin_recipe(const std::string& name, std::uint64_t seed) {
    DatasetRecipe r;
    r.name = name;
    r.seed = seed;
    const std::vector<std::pair<TaskKind, int>> sixPack = {
        {TaskKind::MON, 2}, {TaskKind::ES, 2}, {TaskKind::TP, 2}};
    const std::vector<std::pair<UavType, int>> fourFleet = {
        {UavType::HALE, 1}, {UavType::MALE, 1}, {UavType::UCAV, 1}, {UavType::URAV, 1}};
    const std::vector<std::pair<UavType, int>> fiveFleet = {
        {UavType::HALE, 1}, {UavType::MALE, 1}, {UavType::UCAV, 1}, {UavType::URAV, 2}};

    if (name == "d1") {
        r.taskMix = sixPack;
        r.uavMix = fourFleet;
        r.gcsCount = 1;
        r.fixedTimeCount = 6;
    } else if (name == "d2") {
        r.taskMix = sixPack;
        r.uavMix = fourFleet;
        r.gcsCount = 1;
        r.nfzCount = 1;
        r.fixedTimeCount = 6;
    } else if (name == "d3") {
        r.taskMix = {{TaskKind::MAP, 3}};
        r.uavMix = {{UavType::HALE, 1}, {UavType::MALE, 1}};
        r.gcsCount = 1;
        r.unfixedTimeCount = 3;
    } else if (name == "d4a" || name == "d4b" || name == "d4c" || name == "d4d" || name == "d4e") {
        r.taskMix = sixPack;
        r.uavMix = fiveFleet;
        r.gcsCount = 2;
        r.nfzCount = 2;
        r.lowCoverageGcsCount = 1;
        r.gcsCapacity = 3;  // strict bound: at most two UAVs per station
        r.windowGapHours = 1.7;  // chaining two windows needs the fast profiles
        if (name == "d4a") r.fixedTimeCount = 6;
        if (name == "d4b" || name == "d4c") r.fixedTimeCount = 3, r.unfixedTimeCount = 3;
        if (name == "d4d" || name == "d4e") r.unfixedTimeCount = 6;
        if (name == "d4c") r.dependencyCount = 1;
        if (name == "d4e") r.dependencyCount = 3;
    } else if (name == "d5") {
        r.taskMix = {{TaskKind::MON, 2}, {TaskKind::ES, 1}, {TaskKind::TP, 2}, {TaskKind::MAP, 2}};
        r.uavMix = {{UavType::MALE, 2}, {UavType::UCAV, 1}, {UavType::URAV, 2}};
        r.gcsCount = 3;
        r.nfzCount = 3;
        r.fixedTimeCount = 4;
        r.unfixedTimeCount = 3;
        r.dependencyCount = 1;
        r.lowCoverageGcsCount = 1;
        r.gcsCapacity = 3;
    } else if (name == "tiny2") {
        r.taskMix = {{TaskKind::MON, 1}, {TaskKind::TP, 1}};
        r.uavMix = {{UavType::URAV, 1}, {UavType::MALE, 1}};
        r.fixedTimeCount = 2;
    } else if (name == "tiny3") {
        r.taskMix = {{TaskKind::MON, 1}, {TaskKind::ES, 1}, {TaskKind::TP, 1}};
        r.uavMix = {{UavType::URAV, 1}, {UavType::MALE, 1}};
        r.fixedTimeCount = 3;
    } else if (name == "tiny3b") {
        r.taskMix = {{TaskKind::MON, 1}, {TaskKind::ES, 1}, {TaskKind::TP, 1}};
        r.uavMix = {{UavType::URAV, 1}, {UavType::MALE, 1}, {UavType::UCAV, 1}};
        r.fixedTimeCount = 3;
    } else if (name == "tiny4") {
        r.taskMix = {{TaskKind::MON, 2}, {TaskKind::ES, 1}, {TaskKind::TP, 1}};
        r.uavMix = {{UavType::URAV, 1}, {UavType::MALE, 1}, {UavType::UCAV, 1}};
        r.fixedTimeCount = 4;
    } else {
        throw std::invalid_argument("unknown recipe: " + name);
    }
    if (r.fixedTimeCount + r.unfixedTimeCount != r.task_count())
        throw std::logic_error("recipe window counts do not cover the tasks");
    return r;
}

std::vector<std::string> builtin_recipe_names() {
    return {"d1", "d2", "d3", "d4a", "d4b", "d4c", "d4d", "d4e", "d5",
            "tiny2", "tiny3", "tiny3b", "tiny4"};
}

namespace {

constexpr double kLonMin = 0.0, kLonMax = 2.0;
constexpr double kLatMin = 40.0, kLatMax = 42.0;

double point_segment_dist_deg(const GeoPoint& p, const GeoPoint& a, const GeoPoint& b) {
    const double vx = b.lon - a.lon, vy = b.lat - a.lat;
    const double wx = p.lon - a.lon, wy = p.lat - a.lat;
    const double vv = vx * vx + vy * vy;
    const double t = vv > 0.0 ? std::clamp((wx * vx + wy * vy) / vv, 0.0, 1.0) : 0.0;
    const double dx = wx - t * vx, dy = wy - t * vy;
    return std::hypot(dx, dy);
}

double clearance_deg(const GeoPoint& p, const std::vector<GeoPoint>& poly) {
    if (point_in_polygon(p, poly)) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++)
        best = std::min(best, point_segment_dist_deg(p, poly[j], poly[i]));
    return best;
}

bool zone_clear(const std::vector<GeoPoint>& zone, const std::vector<NoFlyZone>& nfzs) {
    for (const auto& nfz : nfzs)
        for (const auto& p : zone)
            if (clearance_deg(p, nfz.polygon) < 0.12) return false;
    return true;
}

// A rotated rectangle is always convex and simple.
std::vector<GeoPoint> random_quad(RandomSource& rng) {
    const double cx = rng.real(0.5, 1.5);
    const double cy = rng.real(kLatMin + 0.5, kLatMax - 0.5);
    const double hx = rng.real(0.08, 0.15);
    const double hy = rng.real(0.08, 0.15);
    const double th = rng.real(0.0, M_PI / 2.0);
    const double c = std::cos(th), s = std::sin(th);
    std::vector<GeoPoint> quad;
    for (auto [ux, uy] : {std::pair{-1.0, -1.0}, {1.0, -1.0}, {1.0, 1.0}, {-1.0, 1.0}}) {
        const double x = ux * hx, y = uy * hy;
        quad.push_back({cx + x * c - y * s, cy + x * s + y * c, 0.0});
    }
    return quad;
}

std::vector<GeoPoint> make_zone(TaskKind kind, RandomSource& rng,
                                const std::vector<NoFlyZone>& nfzs) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const double cx = rng.real(0.25, 1.75);
        const double cy = rng.real(kLatMin + 0.25, kLatMax - 0.25);
        const double alt = rng.real(3000.0, 9000.0);
        std::vector<GeoPoint> zone;
        switch (kind) {
            case TaskKind::MON: {
                const double h = 0.03;
                zone = {{cx - h, cy - h, alt}, {cx + h, cy - h, alt},
                        {cx + h, cy + h, alt}, {cx - h, cy + h, alt}};
                break;
            }
            case TaskKind::ES: {
                const double th = rng.real(0.0, 2.0 * M_PI);
                const double len = rng.real(0.12, 0.2);
                GeoPoint b{cx + len * std::cos(th), cy + len * std::sin(th), alt};
                if (b.lon < 0.2 || b.lon > 1.8 || b.lat < kLatMin + 0.2 || b.lat > kLatMax - 0.2)
                    continue;
                zone = {{cx, cy, alt}, b};
                break;
            }
            case TaskKind::TP:
                zone = {{cx, cy, alt}};
                break;
            case TaskKind::MAP: {
                const double h = rng.real(0.06, 0.1);
                zone = {{cx - h, cy - h, alt}, {cx + h, cy - h, alt},
                        {cx + h, cy + h, alt}, {cx - h, cy + h, alt}};
                break;
            }
        }
        if (zone_clear(zone, nfzs)) return zone;
    }
    throw std::runtime_error("could not place a task zone clear of the NFZs");
}

bool probe_feasible(const MissionScenario& sc, std::uint64_t seed) {
    PathPlanner planner(Grid::for_scenario(sc));
    // Small instances get the exact check; larger ones a randomized probe.
    ExactPofResult exact = exact_pof(sc, planner, ObjectiveSelection(), 2e5);
    if (!exact.overflowed) return !exact.points.empty();
    RandomSource rng(derive_seed(seed, 0xFEA51B1EULL));
    for (int i = 0; i < 3000; ++i) {
        const Chromosome c = random_chromosome(sc, rng);
        if (evaluate(sc, planner, c).report.feasible) return true;
    }
    return false;
}

MissionScenario build_attempt(const DatasetRecipe& recipe, std::uint64_t seed) {
    RandomSource rng(seed);
    MissionScenario sc;
    sc.region.min = {kLonMin, kLatMin, 0.0};
    sc.region.max = {kLonMax, kLatMax, 70000.0};

    for (int z = 0; z < recipe.nfzCount; ++z)
        sc.nfzs.push_back({"z" + std::to_string(z), random_quad(rng)});

    // Tasks, clear of every NFZ.
    int taskIdx = 0;
    for (const auto& [kind, count] : recipe.taskMix) {
        for (int i = 0; i < count; ++i) {
            TaskSpec t;
            t.id = "t" + std::to_string(taskIdx++);
            t.kind = kind;
            t.zone = make_zone(kind, rng, sc.nfzs);
            t.multiUav = kind == TaskKind::MAP;
            t.requiredUavCount = t.multiUav ? std::min(2, recipe.uav_count()) : 1;
            sc.tasks.push_back(std::move(t));
        }
    }

    // Windows: shuffle, the first fixedTimeCount tasks get staggered fixed
    // windows wide enough for the slowest profile to chain any two of them.
    std::vector<int> windowOrder(sc.tasks.size());
    for (std::size_t i = 0; i < windowOrder.size(); ++i) windowOrder[i] = static_cast<int>(i);
    rng.shuffle(windowOrder);
    double clock = rng.real(2.3, 2.6);
    std::vector<int> fixedIds;
    for (int i = 0; i < static_cast<int>(sc.tasks.size()); ++i) {
        TaskSpec& t = sc.tasks[windowOrder[i]];
        const bool isTp = t.kind == TaskKind::TP;
        const double dur = isTp ? rng.real(0.05, 0.1) : rng.real(0.3, 0.55);
        if (i < recipe.fixedTimeCount) {
            t.window = {WindowMode::Fixed, clock, clock + dur, dur};
            fixedIds.push_back(windowOrder[i]);
            clock += rng.real(recipe.windowGapHours - 0.2, recipe.windowGapHours + 0.2);
        } else if (t.kind == TaskKind::MON || isTp) {
            t.window = {WindowMode::DurationOnly, 0.0, 0.0, dur};
        } else {
            t.window = {WindowMode::Free, 0.0, 0.0, 0.0};
        }
    }

    // GCSs at border-side midpoints; UAVs on the border near their side's GCS.
    const double diagNm = distance_nm(sc.region.min, {kLonMax, kLatMax, 0.0});
    const GeoPoint sides[4] = {{1.0, kLatMin, 0.0}, {1.0, kLatMax, 0.0},
                               {kLonMin, 41.0, 0.0}, {kLonMax, 41.0, 0.0}};
    for (int g = 0; g < recipe.gcsCount; ++g) {
        GcsSpec gcs;
        gcs.id = "g" + std::to_string(g);
        gcs.position = sides[g % 4];
        const int defaultCap = recipe.gcsCount == 1 ? recipe.uav_count() + 1 : recipe.uav_count();
        gcs.maxUavs = recipe.gcsCapacity > 0 ? recipe.gcsCapacity : defaultCap;
        gcs.permittedTypes = {UavType::URAV, UavType::MALE, UavType::HALE, UavType::UCAV};
        const bool low = g >= recipe.gcsCount - recipe.lowCoverageGcsCount;
        gcs.coverage = (low ? 0.4 : 0.8) * diagNm;
        sc.gcss.push_back(std::move(gcs));
    }

    const int borderSides = std::min(recipe.gcsCount, 2);
    int uavIdx = 0;
    for (const auto& [type, count] : recipe.uavMix) {
        for (int i = 0; i < count; ++i) {
            const int side = uavIdx % borderSides;
            GeoPoint pos{rng.real(0.7, 1.3), side == 0 ? kLatMin : kLatMax, 0.0};
            sc.uavs.push_back(catalog_uav(type, "u" + std::to_string(uavIdx++), pos));
        }
    }

    // Dependencies: a window-consistent `before`, then vehicle dependencies
    // between single-UAV tasks with workable fleets.
    auto single_tasks_sharing_uav = [&]() -> std::pair<int, int> {
        for (std::size_t a = 0; a < sc.tasks.size(); ++a) {
            for (std::size_t b = a + 1; b < sc.tasks.size(); ++b) {
                if (sc.tasks[a].multiUav || sc.tasks[b].multiUav) continue;
                for (const auto& u : sc.uavs)
                    if (uav_compatible(sc.tasks[a].kind, u) && uav_compatible(sc.tasks[b].kind, u))
                        return {static_cast<int>(a), static_cast<int>(b)};
            }
        }
        return {-1, -1};
    };
    for (int d = 0; d < recipe.dependencyCount; ++d) {
        Dependency dep;
        if (d == 0) {
            dep.kind = DependencyKind::Before;
            if (fixedIds.size() >= 2) {
                dep.first = sc.tasks[fixedIds[0]].id;
                dep.second = sc.tasks[fixedIds[1]].id;
            } else {
                auto [a, b] = single_tasks_sharing_uav();
                if (a < 0) break;
                dep.first = sc.tasks[a].id;
                dep.second = sc.tasks[b].id;
            }
        } else if (d == 1) {
            auto [a, b] = single_tasks_sharing_uav();
            if (a < 0) break;
            dep.kind = DependencyKind::SameUav;
            dep.first = sc.tasks[a].id;
            dep.second = sc.tasks[b].id;
        } else {
            dep.kind = DependencyKind::DiffUav;
            int a = -1, b = -1;
            for (std::size_t i = 0; i < sc.tasks.size() && a < 0; ++i)
                for (std::size_t j = i + 1; j < sc.tasks.size() && a < 0; ++j) {
                    if (sc.tasks[i].multiUav || sc.tasks[j].multiUav) continue;
                    bool taken = false;
                    for (const auto& existing : sc.dependencies)
                        taken = taken || (existing.first == sc.tasks[i].id &&
                                          existing.second == sc.tasks[j].id);
                    if (!taken) {
                        a = static_cast<int>(i);
                        b = static_cast<int>(j);
                    }
                }
            if (a < 0) break;
            dep.first = sc.tasks[a].id;
            dep.second = sc.tasks[b].id;
        }
        sc.dependencies.push_back(std::move(dep));
    }

    return sc;
}

}  // namespace

MissionScenario generate_dataset(const DatasetRecipe& recipe) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        const std::uint64_t seed = attempt == 0 ? recipe.seed : derive_seed(recipe.seed, attempt);
        MissionScenario sc;
        try {
            sc = build_attempt(recipe, seed);
        } catch (const std::runtime_error&) {
            continue;  // zone placement starved; redraw
        }
        if (!validate_scenario(sc).empty()) continue;
        if (probe_feasible(sc, seed)) return sc;
    }
    throw std::runtime_error("recipe '" + recipe.name + "' failed the feasibility probe 100 times");
}

}  // namespace uavplan
