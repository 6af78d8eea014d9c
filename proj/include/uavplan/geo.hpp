#pragma once

#include <cstddef>
#include <vector>

namespace uavplan {

// Mean Earth radius in nautical miles (spherical model).
inline constexpr double kEarthRadiusNm = 3440.065;
// International nautical mile: 1852 m; 1 ft = 0.3048 m.
inline constexpr double kFeetPerNm = 1852.0 / 0.3048;

// 3D geographic point: longitude/latitude in degrees, altitude in feet.
struct GeoPoint {
    double lon = 0.0;
    double lat = 0.0;
    double alt = 0.0;

    bool operator==(const GeoPoint& o) const { return lon == o.lon && lat == o.lat && alt == o.alt; }
};

double deg2rad(double deg);

// Great-circle distance over the 2D (lon, lat) components, in NM.
double great_circle_nm(const GeoPoint& a, const GeoPoint& b);

// 3D distance: great-circle arc combined with the altitude difference
// (feet converted to NM) by Euclidean composition.
double distance_nm(const GeoPoint& a, const GeoPoint& b);

// Sum of 3D segment distances along a polyline.
double polyline_length_nm(const std::vector<GeoPoint>& pts);

// 2D point-in-polygon (ray casting). Points on an edge may report either way.
bool point_in_polygon(const GeoPoint& p, const std::vector<GeoPoint>& poly);

// Proper or touching intersection of 2D segments ab and cd.
bool segments_intersect(const GeoPoint& a, const GeoPoint& b, const GeoPoint& c, const GeoPoint& d);

// True when no two non-adjacent edges intersect and no vertices repeat.
bool polygon_is_simple(const std::vector<GeoPoint>& poly);

// Approximate polygon area in NM^2 (equirectangular projection around the
// polygon's mean latitude; adequate for mission-scale zones).
double polygon_area_nm2(const std::vector<GeoPoint>& poly);

}  // namespace uavplan
