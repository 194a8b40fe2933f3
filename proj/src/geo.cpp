#include "vigia/geo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "vigia/error.hpp"
#include "vigia/io.hpp"

namespace vigia {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

bool on_segment(const GeoPoint& p, const GeoPoint& a, const GeoPoint& b) {
    const double cross = (b.lon - a.lon) * (p.lat - a.lat) - (b.lat - a.lat) * (p.lon - a.lon);
    if (cross != 0.0) return false;
    return p.lon >= std::min(a.lon, b.lon) && p.lon <= std::max(a.lon, b.lon) &&
           p.lat >= std::min(a.lat, b.lat) && p.lat <= std::max(a.lat, b.lat);
}

void validate_ring(const std::vector<GeoPoint>& ring, std::size_t index) {
    if (ring.size() < 4) {
        throw ValidationError("ring " + std::to_string(index) + " has fewer than 4 vertices");
    }
    if (ring.front().lat != ring.back().lat || ring.front().lon != ring.back().lon) {
        throw ValidationError("ring " + std::to_string(index) + " is not closed");
    }
    std::size_t distinct = 0;
    for (std::size_t i = 0; i + 1 < ring.size(); ++i) {
        if (ring[i].lat != ring[i + 1].lat || ring[i].lon != ring[i + 1].lon) ++distinct;
    }
    if (distinct < 3) {
        throw ValidationError("ring " + std::to_string(index) + " has fewer than 3 distinct vertices");
    }
    for (const GeoPoint& v : ring) {
        if (!valid_point(v)) {
            throw ValidationError("ring " + std::to_string(index) + " has a vertex outside lat/lon bounds");
        }
    }
    for (std::size_t i = 0; i + 1 < ring.size(); ++i) {
        if (std::fabs(ring[i].lon - ring[i + 1].lon) > 180.0) {
            throw ValidationError("ring " + std::to_string(index) +
                                  " crosses the antimeridian; not supported");
        }
    }
}

std::vector<GeoPoint> read_ring(const nlohmann::json& coords) {
    std::vector<GeoPoint> ring;
    ring.reserve(coords.size());
    for (const auto& pair : coords) {
        if (!pair.is_array() || pair.size() < 2) {
            throw ValidationError("coordinate entry is not a [lon, lat] pair");
        }
        // GeoJSON order is (lon, lat); stored as GeoPoint{lat, lon}.
        ring.push_back(GeoPoint{pair[1].get<double>(), pair[0].get<double>()});
    }
    return ring;
}

void collect_geometry(const nlohmann::json& node, EezGeometry& out, bool& found) {
    if (!node.is_object()) return;
    const auto type_it = node.find("type");
    if (type_it == node.end() || !type_it->is_string()) return;
    const std::string type = type_it->get<std::string>();
    if (type == "Polygon") {
        for (const auto& ring : node.at("coordinates")) out.rings.push_back(read_ring(ring));
        found = true;
    } else if (type == "MultiPolygon") {
        for (const auto& poly : node.at("coordinates"))
            for (const auto& ring : poly) out.rings.push_back(read_ring(ring));
        found = true;
    } else if (type == "Feature") {
        if (out.name.empty() && node.contains("properties") && node["properties"].is_object()) {
            for (const char* key : {"GEONAME", "name", "Name"}) {
                if (node["properties"].contains(key) && node["properties"][key].is_string()) {
                    out.name = node["properties"][key].get<std::string>();
                    break;
                }
            }
        }
        if (node.contains("geometry")) collect_geometry(node["geometry"], out, found);
    } else if (type == "FeatureCollection") {
        for (const auto& f : node.at("features")) collect_geometry(f, out, found);
    } else if (type == "GeometryCollection") {
        for (const auto& g : node.at("geometries")) collect_geometry(g, out, found);
    }
}

}  // namespace

bool valid_point(const GeoPoint& p) {
    return std::isfinite(p.lat) && std::isfinite(p.lon) && p.lat >= -90.0 && p.lat <= 90.0 &&
           p.lon >= -180.0 && p.lon <= 180.0;
}

EezGeometry parse_eez_geojson(const std::string& text, const std::string& origin) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError("malformed GeoJSON in " + origin + " at byte " + std::to_string(e.byte) +
                          ": " + e.what());
    }
    EezGeometry geom;
    bool found = false;
    try {
        collect_geometry(doc, geom, found);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError("malformed GeoJSON structure in " + origin + ": " + e.what());
    }
    if (!found) {
        throw ValidationError("no Polygon/MultiPolygon geometry found in " + origin);
    }
    if (geom.rings.empty()) {
        throw ValidationError("polygon geometry in " + origin + " has no rings");
    }
    for (std::size_t i = 0; i < geom.rings.size(); ++i) validate_ring(geom.rings[i], i);
    return geom;
}

EezGeometry load_eez(const std::string& path) {
    return parse_eez_geojson(read_file(path), path);
}

bool point_in_polygon(const GeoPoint& p, const EezGeometry& g) {
    bool inside = false;
    for (const auto& ring : g.rings) {
        for (std::size_t i = 0; i + 1 < ring.size(); ++i) {
            const GeoPoint& a = ring[i];
            const GeoPoint& b = ring[i + 1];
            if (on_segment(p, a, b)) return true;  // boundary counts as inside
            if ((a.lat > p.lat) != (b.lat > p.lat)) {
                const double x_cross = a.lon + (p.lat - a.lat) / (b.lat - a.lat) * (b.lon - a.lon);
                if (p.lon < x_cross) inside = !inside;
            }
        }
    }
    return inside;
}

double haversine_km(const GeoPoint& a, const GeoPoint& b) {
    const double lat1 = a.lat * kDegToRad;
    const double lat2 = b.lat * kDegToRad;
    const double dlat = (b.lat - a.lat) * kDegToRad;
    const double dlon = (b.lon - a.lon) * kDegToRad;
    const double sin_lat = std::sin(dlat / 2.0);
    const double sin_lon = std::sin(dlon / 2.0);
    double h = sin_lat * sin_lat + std::cos(lat1) * std::cos(lat2) * sin_lon * sin_lon;
    h = std::clamp(h, 0.0, 1.0);
    return 2.0 * kEarthRadiusKm * std::atan2(std::sqrt(h), std::sqrt(1.0 - h));
}

double distance_to_boundary_km(const GeoPoint& p, const EezGeometry& g) {
    const double cos_lat = std::cos(p.lat * kDegToRad);
    double best_sq = std::numeric_limits<double>::infinity();
    for (const auto& ring : g.rings) {
        for (std::size_t i = 0; i + 1 < ring.size(); ++i) {
            // Local equirectangular projection centered at p, in km.
            const double ax = (ring[i].lon - p.lon) * cos_lat * kKmPerDegree;
            const double ay = (ring[i].lat - p.lat) * kKmPerDegree;
            const double bx = (ring[i + 1].lon - p.lon) * cos_lat * kKmPerDegree;
            const double by = (ring[i + 1].lat - p.lat) * kKmPerDegree;
            const double dx = bx - ax;
            const double dy = by - ay;
            const double seg_sq = dx * dx + dy * dy;
            double t = 0.0;
            if (seg_sq > 0.0) t = std::clamp(-(ax * dx + ay * dy) / seg_sq, 0.0, 1.0);
            const double cx = ax + t * dx;
            const double cy = ay + t * dy;
            best_sq = std::min(best_sq, cx * cx + cy * cy);
        }
    }
    return std::sqrt(best_sq);
}

ZoneClass classify_zone(const GeoPoint& p, const EezGeometry& g, double buffer_km) {
    if (!(buffer_km >= 0.0)) throw std::invalid_argument("buffer_km must be >= 0");
    if (!point_in_polygon(p, g)) return ZoneClass{Zone::Outside, 0.0};
    if (buffer_km > 0.0 && distance_to_boundary_km(p, g) <= buffer_km) {
        return ZoneClass{Zone::InsideWithinBuffer, buffer_km};
    }
    return ZoneClass{Zone::InsideBeyondBuffer, 0.0};
}

}  // namespace vigia
