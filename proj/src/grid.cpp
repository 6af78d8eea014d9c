#include "uavplan/grid.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>

namespace uavplan {

double path_length(const Path& path) { return polyline_length_nm(path.waypoints); }

namespace {

bool rect_intersects_polygon(double x0, double y0, double x1, double y1,
                             const std::vector<GeoPoint>& poly) {
    const GeoPoint c00{x0, y0, 0}, c10{x1, y0, 0}, c11{x1, y1, 0}, c01{x0, y1, 0};
    for (const auto& c : {c00, c10, c11, c01})
        if (point_in_polygon(c, poly)) return true;
    for (const auto& v : poly)
        if (v.lon >= x0 && v.lon <= x1 && v.lat >= y0 && v.lat <= y1) return true;
    const GeoPoint rect[4] = {c00, c10, c11, c01};
    const std::size_t n = poly.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        for (int e = 0; e < 4; ++e) {
            if (segments_intersect(rect[e], rect[(e + 1) % 4], poly[j], poly[i])) return true;
        }
    }
    return false;
}

}  // namespace

Grid::Grid(const Region& region, const std::vector<NoFlyZone>& nfzs, int cellsX, int cellsY)
    : region_(region), nx_(cellsX), ny_(cellsY) {
    cellW_ = (region_.max.lon - region_.min.lon) / nx_;
    cellH_ = (region_.max.lat - region_.min.lat) / ny_;
    blocked_.assign(static_cast<std::size_t>(nx_) * ny_, 0);
    nfzPolys_.reserve(nfzs.size());
    for (const auto& z : nfzs) nfzPolys_.push_back(z.polygon);
    for (int iy = 0; iy < ny_; ++iy) {
        for (int ix = 0; ix < nx_; ++ix) {
            const double x0 = region_.min.lon + ix * cellW_;
            const double y0 = region_.min.lat + iy * cellH_;
            for (const auto& poly : nfzPolys_) {
                if (rect_intersects_polygon(x0, y0, x0 + cellW_, y0 + cellH_, poly)) {
                    blocked_[static_cast<std::size_t>(iy) * nx_ + ix] = 1;
                    break;
                }
            }
        }
    }
}

Grid Grid::for_scenario(const MissionScenario& scenario, int cells) {
    return Grid(scenario.region, scenario.nfzs, cells, cells);
}

bool Grid::blocked(int ix, int iy) const {
    if (ix < 0 || iy < 0 || ix >= nx_ || iy >= ny_) return true;
    return blocked_[static_cast<std::size_t>(iy) * nx_ + ix] != 0;
}

bool Grid::blocked_at(const GeoPoint& p) const {
    auto [ix, iy] = cell_of(p);
    return blocked(ix, iy);
}

GeoPoint Grid::corner_point(int ix, int iy) const {
    return GeoPoint{region_.min.lon + ix * cellW_, region_.min.lat + iy * cellH_, 0.0};
}

std::pair<int, int> Grid::cell_of(const GeoPoint& p) const {
    int ix = static_cast<int>(std::floor((p.lon - region_.min.lon) / cellW_));
    int iy = static_cast<int>(std::floor((p.lat - region_.min.lat) / cellH_));
    ix = std::clamp(ix, 0, nx_ - 1);
    iy = std::clamp(iy, 0, ny_ - 1);
    return {ix, iy};
}

bool Grid::segment_hits_nfz(const GeoPoint& a, const GeoPoint& b) const {
    for (const auto& poly : nfzPolys_) {
        if (point_in_polygon(a, poly) || point_in_polygon(b, poly)) return true;
        const std::size_t n = poly.size();
        for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
            if (segments_intersect(a, b, poly[j], poly[i])) return true;
        }
    }
    return false;
}

bool Grid::line_of_sight(const GeoPoint& a, const GeoPoint& b) const {
    // Walk cells the segment passes through, conservatively including both
    // sides when it runs along a gridline.
    const double u0 = (a.lon - region_.min.lon) / cellW_;
    const double v0 = (a.lat - region_.min.lat) / cellH_;
    const double u1 = (b.lon - region_.min.lon) / cellW_;
    const double v1 = (b.lat - region_.min.lat) / cellH_;

    auto scan = [&](double p0, double q0, double p1, double q1, bool swapped) -> bool {
        if (p0 > p1) {
            std::swap(p0, p1);
            std::swap(q0, q1);
        }
        const int cLo = static_cast<int>(std::floor(p0));
        const int cHi = static_cast<int>(std::ceil(p1)) - 1;
        for (int c = cLo; c <= std::max(cHi, cLo); ++c) {
            // Parameter range of the segment within band [c, c+1].
            double tA = 0.0, tB = 1.0;
            if (p1 > p0) {
                tA = std::clamp((c - p0) / (p1 - p0), 0.0, 1.0);
                tB = std::clamp((c + 1 - p0) / (p1 - p0), 0.0, 1.0);
            }
            const double qa = q0 + (q1 - q0) * tA;
            const double qb = q0 + (q1 - q0) * tB;
            const double qLo = std::min(qa, qb);
            const double qHi = std::max(qa, qb);
            int rLo = static_cast<int>(std::floor(qLo));
            int rHi = static_cast<int>(std::floor(qHi));
            if (qLo == std::floor(qLo)) rLo -= 1;  // on a gridline: include both sides
            for (int r = rLo; r <= rHi; ++r) {
                const int ix = swapped ? r : c;
                const int iy = swapped ? c : r;
                if (ix < 0 || iy < 0 || ix >= nx_ || iy >= ny_) continue;
                if (blocked(ix, iy)) return false;
            }
        }
        return true;
    };

    if (std::abs(u1 - u0) >= std::abs(v1 - v0)) return scan(u0, v0, u1, v1, false);
    return scan(v0, u0, v1, u1, true);
}

std::size_t PathPlanner::KeyHash::operator()(const Key& k) const {
    auto h = std::hash<double>{};
    std::size_t seed = h(k.a);
    for (double x : {k.b, k.c, k.d}) seed ^= h(x) + 0x9e3779b9 + (seed << 6) + (seed >> 2);
    return seed;
}

std::optional<Path> PathPlanner::plan(const GeoPoint& from, const GeoPoint& to) const {
    auto poly2d = plan2d(from, to);
    if (!poly2d) return std::nullopt;

    Path out;
    out.waypoints = std::move(*poly2d);
    // Interpolate altitude along 2D arc length; total 3D length then equals
    // hypot(2D length, altitude delta).
    double total2d = 0.0;
    std::vector<double> cum(out.waypoints.size(), 0.0);
    for (std::size_t i = 1; i < out.waypoints.size(); ++i) {
        total2d += great_circle_nm(out.waypoints[i - 1], out.waypoints[i]);
        cum[i] = total2d;
    }
    for (std::size_t i = 0; i < out.waypoints.size(); ++i) {
        const double frac = total2d > 0.0 ? cum[i] / total2d : (i == 0 ? 0.0 : 1.0);
        out.waypoints[i].alt = from.alt + (to.alt - from.alt) * frac;
    }
    out.waypoints.front().alt = from.alt;
    out.waypoints.back().alt = to.alt;
    out.lengthNm = polyline_length_nm(out.waypoints);
    return out;
}

std::optional<std::vector<GeoPoint>> PathPlanner::plan2d(const GeoPoint& from, const GeoPoint& to) const {
    const Key key{from.lon, from.lat, to.lon, to.lat};
    {
        std::lock_guard<std::mutex> lock(cacheMutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    auto result = theta_star(from, to);
    std::lock_guard<std::mutex> lock(cacheMutex_);
    cache_.emplace(key, result);
    return result;
}

std::optional<std::vector<GeoPoint>> PathPlanner::theta_star(const GeoPoint& from, const GeoPoint& to) const {
    const GeoPoint from2d{from.lon, from.lat, 0.0};
    const GeoPoint to2d{to.lon, to.lat, 0.0};

    // Lazy direct route: nothing in the way, done.
    if (!grid_.segment_hits_nfz(from2d, to2d)) return std::vector<GeoPoint>{from2d, to2d};

    auto [sx, sy] = grid_.cell_of(from2d);
    auto [gx, gy] = grid_.cell_of(to2d);
    if (grid_.blocked(sx, sy) || grid_.blocked(gx, gy)) return std::nullopt;

    const int cx = grid_.cells_x(), cy = grid_.cells_y();
    const int cornersX = cx + 1, cornersY = cy + 1;
    const int nCorners = cornersX * cornersY;
    const int startId = nCorners, goalId = nCorners + 1;
    const int nNodes = nCorners + 2;

    auto node_point = [&](int id) -> GeoPoint {
        if (id == startId) return from2d;
        if (id == goalId) return to2d;
        return grid_.corner_point(id % cornersX, id / cornersX);
    };

    std::vector<double> g(nNodes, std::numeric_limits<double>::infinity());
    std::vector<int> parent(nNodes, -1);
    std::vector<std::uint8_t> closed(nNodes, 0);

    struct Entry {
        double f, g;
        int id;
    };
    auto cmp = [](const Entry& a, const Entry& b) {
        if (a.f != b.f) return a.f > b.f;
        if (a.g != b.g) return a.g < b.g;  // prefer larger g on f-ties
        return a.id > b.id;
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> open(cmp);

    auto heuristic = [&](int id) { return great_circle_nm(node_point(id), to2d); };

    g[startId] = 0.0;
    parent[startId] = startId;
    open.push({heuristic(startId), 0.0, startId});

    // Edge validity between lattice corners: a gridline edge is passable when
    // either incident cell is free; a diagonal needs its crossing cell free.
    auto corner_edge_ok = [&](int ix, int iy, int dx, int dy) -> bool {
        const int jx = ix + dx, jy = iy + dy;
        if (jx < 0 || jy < 0 || jx >= cornersX || jy >= cornersY) return false;
        if (dx != 0 && dy != 0) {
            return !grid_.blocked(std::min(ix, jx), std::min(iy, jy));
        }
        if (dx != 0) {  // horizontal edge at row iy
            const int col = std::min(ix, jx);
            return !grid_.blocked(col, iy) || !grid_.blocked(col, iy - 1);
        }
        const int row = std::min(iy, jy);  // vertical edge at column ix
        return !grid_.blocked(ix, row) || !grid_.blocked(ix - 1, row);
    };

    auto own_cell_corner = [&](int cellX, int cellY, int cornerId) {
        const int cIx = cornerId % cornersX, cIy = cornerId / cornersX;
        return (cIx == cellX || cIx == cellX + 1) && (cIy == cellY || cIy == cellY + 1);
    };

    auto los_nodes = [&](int a, int b) -> bool {
        // Segments between an endpoint and a corner of its own free cell stay
        // inside that cell.
        if (a == startId && own_cell_corner(sx, sy, b)) return true;
        if (b == goalId && own_cell_corner(gx, gy, a)) return true;
        if (a == startId && b == goalId) return grid_.line_of_sight(from2d, to2d);
        return grid_.line_of_sight(node_point(a), node_point(b));
    };

    auto relax = [&](int s, int n) {
        const GeoPoint pn = node_point(n);
        double cand;
        int candParent;
        if (parent[s] != s && los_nodes(parent[s], n)) {
            cand = g[parent[s]] + great_circle_nm(node_point(parent[s]), pn);
            candParent = parent[s];
        } else {
            cand = g[s] + great_circle_nm(node_point(s), pn);
            candParent = s;
        }
        if (cand + 1e-12 < g[n]) {
            g[n] = cand;
            parent[n] = candParent;
            open.push({cand + heuristic(n), cand, n});
        }
    };

    while (!open.empty()) {
        const Entry top = open.top();
        open.pop();
        const int s = top.id;
        if (closed[s] || top.g > g[s]) continue;
        closed[s] = 1;
        if (s == goalId) break;

        if (s == startId) {
            for (int dy = 0; dy <= 1; ++dy)
                for (int dx = 0; dx <= 1; ++dx) relax(s, (sy + dy) * cornersX + (sx + dx));
            if (los_nodes(s, goalId)) relax(s, goalId);
            continue;
        }
        const int ix = s % cornersX, iy = s / cornersX;
        for (int dy = -1; dy <= 1; ++dy) {
            for (int dx = -1; dx <= 1; ++dx) {
                if (dx == 0 && dy == 0) continue;
                if (!corner_edge_ok(ix, iy, dx, dy)) continue;
                relax(s, (iy + dy) * cornersX + (ix + dx));
            }
        }
        if (los_nodes(s, goalId)) relax(s, goalId);
    }

    if (!closed[goalId]) return std::nullopt;

    std::vector<GeoPoint> rev;
    int cur = goalId;
    while (cur != startId) {
        rev.push_back(node_point(cur));
        cur = parent[cur];
    }
    rev.push_back(from2d);
    std::reverse(rev.begin(), rev.end());
    return rev;
}

}  // namespace uavplan
