#include "uavplan/geo.hpp"

#include <algorithm>
#include <cmath>

namespace uavplan {

double deg2rad(double deg) { return deg * M_PI / 180.0; }

double great_circle_nm(const GeoPoint& a, const GeoPoint& b) {
    if (a.lon == b.lon && a.lat == b.lat) return 0.0;
    const double lat1 = deg2rad(a.lat);
    const double lat2 = deg2rad(b.lat);
    const double dlat = lat2 - lat1;
    const double dlon = deg2rad(b.lon - a.lon);
    const double s1 = std::sin(dlat / 2.0);
    const double s2 = std::sin(dlon / 2.0);
    const double h = s1 * s1 + std::cos(lat1) * std::cos(lat2) * s2 * s2;
    return kEarthRadiusNm * 2.0 * std::asin(std::min(1.0, std::sqrt(h)));
}

double distance_nm(const GeoPoint& a, const GeoPoint& b) {
    const double gc = great_circle_nm(a, b);
    const double dalt = (a.alt - b.alt) / kFeetPerNm;
    return std::hypot(gc, dalt);
}

double polyline_length_nm(const std::vector<GeoPoint>& pts) {
    double sum = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) sum += distance_nm(pts[i - 1], pts[i]);
    return sum;
}

bool point_in_polygon(const GeoPoint& p, const std::vector<GeoPoint>& poly) {
    bool inside = false;
    const std::size_t n = poly.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const double xi = poly[i].lon, yi = poly[i].lat;
        const double xj = poly[j].lon, yj = poly[j].lat;
        if ((yi > p.lat) != (yj > p.lat)) {
            const double xcross = xj + (p.lat - yj) / (yi - yj) * (xi - xj);
            if (p.lon < xcross) inside = !inside;
        }
    }
    return inside;
}

namespace {

double cross(double ax, double ay, double bx, double by) { return ax * by - ay * bx; }

int orientation(const GeoPoint& a, const GeoPoint& b, const GeoPoint& c) {
    const double v = cross(b.lon - a.lon, b.lat - a.lat, c.lon - a.lon, c.lat - a.lat);
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}

bool on_segment(const GeoPoint& a, const GeoPoint& b, const GeoPoint& p) {
    return std::min(a.lon, b.lon) <= p.lon && p.lon <= std::max(a.lon, b.lon) &&
           std::min(a.lat, b.lat) <= p.lat && p.lat <= std::max(a.lat, b.lat);
}

}  // namespace

bool segments_intersect(const GeoPoint& a, const GeoPoint& b, const GeoPoint& c, const GeoPoint& d) {
    const int o1 = orientation(a, b, c);
    const int o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a);
    const int o4 = orientation(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

bool polygon_is_simple(const std::vector<GeoPoint>& poly) {
    const std::size_t n = poly.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (poly[i].lon == poly[j].lon && poly[i].lat == poly[j].lat) return false;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const GeoPoint& a = poly[i];
        const GeoPoint& b = poly[(i + 1) % n];
        for (std::size_t j = i + 1; j < n; ++j) {
            // Skip adjacent edges (they share a vertex).
            if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
            if (segments_intersect(a, b, poly[j], poly[(j + 1) % n])) return false;
        }
    }
    return true;
}

double polygon_area_nm2(const std::vector<GeoPoint>& poly) {
    if (poly.size() < 3) return 0.0;
    double latSum = 0.0;
    for (const auto& p : poly) latSum += p.lat;
    const double lat0 = deg2rad(latSum / static_cast<double>(poly.size()));
    const double nmPerDegLat = kEarthRadiusNm * M_PI / 180.0;
    const double nmPerDegLon = nmPerDegLat * std::cos(lat0);
    double area2 = 0.0;  // shoelace, twice the signed area
    const std::size_t n = poly.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const double xi = poly[i].lon * nmPerDegLon, yi = poly[i].lat * nmPerDegLat;
        const double xj = poly[j].lon * nmPerDegLon, yj = poly[j].lat * nmPerDegLat;
        area2 += xj * yi - xi * yj;
    }
    return std::abs(area2) / 2.0;
}

}  // namespace uavplan
