#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "uavplan/geo.hpp"
#include "uavplan/scenario.hpp"

namespace uavplan {

// NFZ-avoiding path between two mission points.
struct Path {
    std::vector<GeoPoint> waypoints;  // >= 2
    double lengthNm = 0.0;            // sum of 3D segment distances
};

double path_length(const Path& path);

// Occupancy grid over the scenario region. A cell is blocked when its
// rectangle intersects any NFZ polygon (conservative).
class Grid {
public:
    Grid(const Region& region, const std::vector<NoFlyZone>& nfzs, int cellsX = 64, int cellsY = 64);

    static Grid for_scenario(const MissionScenario& scenario, int cells = 64);

    bool blocked(int ix, int iy) const;
    bool blocked_at(const GeoPoint& p) const;
    int cells_x() const { return nx_; }
    int cells_y() const { return ny_; }
    const Region& region() const { return region_; }

    // Corner (ix, iy) of the cell lattice, ix in [0, nx], iy in [0, ny].
    GeoPoint corner_point(int ix, int iy) const;
    // Cell indices containing p (clamped to the grid).
    std::pair<int, int> cell_of(const GeoPoint& p) const;

    // True when the 2D segment a-b crosses no blocked cell (supercover walk).
    bool line_of_sight(const GeoPoint& a, const GeoPoint& b) const;

    // Exact geometry test against the NFZ polygons themselves.
    bool segment_hits_nfz(const GeoPoint& a, const GeoPoint& b) const;

private:
    Region region_;
    int nx_, ny_;
    double cellW_, cellH_;  // degrees
    std::vector<std::uint8_t> blocked_;
    std::vector<std::vector<GeoPoint>> nfzPolys_;
};

// Theta* any-angle planner over a grid, with a concurrent-read path cache.
// Results are deterministic: open-list ties break on larger g, then node index.
class PathPlanner {
public:
    explicit PathPlanner(Grid grid) : grid_(std::move(grid)) {}

    // 3D path from `from` to `to`. Straight segment when nothing blocks it.
    // Altitudes of intermediate waypoints are interpolated along 2D arc
    // length so the 3D length equals hypot(2D length, altitude delta).
    // Returns nullopt when no route exists or an endpoint is blocked.
    std::optional<Path> plan(const GeoPoint& from, const GeoPoint& to) const;

    const Grid& grid() const { return grid_; }

private:
    struct Key {
        double a, b, c, d;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const;
    };

    // 2D planning core (altitudes ignored); cached.
    std::optional<std::vector<GeoPoint>> plan2d(const GeoPoint& from, const GeoPoint& to) const;
    std::optional<std::vector<GeoPoint>> theta_star(const GeoPoint& from, const GeoPoint& to) const;

    Grid grid_;
    mutable std::mutex cacheMutex_;
    mutable std::unordered_map<Key, std::optional<std::vector<GeoPoint>>, KeyHash> cache_;
};

}  // namespace uavplan
