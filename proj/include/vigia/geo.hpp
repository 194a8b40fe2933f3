#pragma once

#include <numbers>
#include <string>
#include <vector>

namespace vigia {

/// WGS84 position in degrees.
struct GeoPoint {
    double lat = 0.0;  // [-90, 90]
    double lon = 0.0;  // [-180, 180]
};

bool valid_point(const GeoPoint& p);

/// EEZ boundary: one or more closed rings (first vertex == last). Holes are
/// handled implicitly by the even-odd containment rule. Immutable after load;
/// all queries are read-only and thread-safe.
struct EezGeometry {
    std::vector<std::vector<GeoPoint>> rings;
    std::string name;
};

enum class Zone { Outside, InsideBeyondBuffer, InsideWithinBuffer };

struct ZoneClass {
    Zone zone = Zone::Outside;
    double buffer_km = 0.0;  // set only for InsideWithinBuffer

    bool operator==(const ZoneClass&) const = default;
};

inline constexpr double kEarthRadiusKm = 6371.0088;  // mean Earth radius
inline constexpr double kKmPerDegree = kEarthRadiusKm * std::numbers::pi / 180.0;

/// Reads a GeoJSON Polygon/MultiPolygon (optionally wrapped in Feature or
/// FeatureCollection). Coordinates are (lon, lat) on disk. Rings that cross
/// the antimeridian are rejected.
EezGeometry load_eez(const std::string& path);
EezGeometry parse_eez_geojson(const std::string& text, const std::string& origin = "<geojson>");

/// Even-odd ray casting; points exactly on the boundary count as inside.
bool point_in_polygon(const GeoPoint& p, const EezGeometry& g);

/// Great-circle distance on the mean-radius sphere.
double haversine_km(const GeoPoint& a, const GeoPoint& b);

/// Minimum distance from p to any boundary segment, computed in a local
/// equirectangular projection centered at p. Adequate below a few hundred km,
/// far beyond the <= 10 km buffers used here.
double distance_to_boundary_km(const GeoPoint& p, const EezGeometry& g);

/// Outside / inside-beyond-buffer / inside-within-buffer. buffer_km == 0 maps
/// every inside point to InsideBeyondBuffer.
ZoneClass classify_zone(const GeoPoint& p, const EezGeometry& g, double buffer_km);

}  // namespace vigia
