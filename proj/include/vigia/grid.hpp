#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vigia/date.hpp"
#include "vigia/geo.hpp"

namespace vigia {

enum class GridVar { Sst, Chl, Sea };

const char* to_string(GridVar v);
std::optional<GridVar> grid_var_from_string(std::string_view s);

/// Either a number or Missing (cloud cover etc.). Missing propagates through
/// sampling and becomes an indicator column at encoding time.
using SampleValue = std::optional<double>;

/// One dated raster. (lat0, lon0) is the center of cell [0,0]; row r / col c
/// is centered at (lat0 + r*dlat, lon0 + c*dlon). dlat/dlon may be negative.
/// Missing cells are stored as NaN. Immutable after load.
struct GridField {
    GridVar var = GridVar::Sst;
    double lat0 = 0, lon0 = 0;
    double dlat = 0, dlon = 0;
    int nrows = 0, ncols = 0;
    Date period_start;
    std::vector<double> values;  // nrows*ncols, row-major

    double raw(int r, int c) const { return values[static_cast<std::size_t>(r) * ncols + c]; }
    SampleValue at(int r, int c) const {
        double v = raw(r, c);
        if (v != v) return std::nullopt;
        return v;
    }
    double cell_lat(int r) const { return lat0 + r * dlat; }
    double cell_lon(int c) const { return lon0 + c * dlon; }
};

bool same_geometry(const GridField& a, const GridField& b);
bool equal_fields(const GridField& a, const GridField& b);  // NaN == NaN for cells

/// Time-ordered stack of rasters sharing variable and geometry.
struct GridStack {
    GridVar var = GridVar::Sst;
    std::vector<GridField> fields;  // period_start strictly increasing
};

/// Grid-CSV: line 1 fixed header, line 2 metadata values, then nrows data
/// rows of ncols cells ('NA' = missing). LF endings, '.' decimal separator.
GridField load_grid(const std::string& path);
GridField parse_grid_csv(const std::string& text, const std::string& origin = "<grid-csv>");
std::string format_grid_csv(const GridField& g);
void save_grid(const GridField& g, const std::string& path);

GridStack make_stack(std::vector<GridField> fields);

/// Loads every *.csv under dir and groups into one stack per variable.
std::map<GridVar, GridStack> load_stack_dir(const std::string& dir);

/// Zero-based 8-day composite index within d's year; period 0 starts Jan 1.
/// The last period of a year spans fewer than 8 days.
int period_index(const Date& d);
Date period_start_date(int year, int index);
Date period_end_date(int year, int index);

/// Value of the grid cell nearest to p in the field whose 8-day period covers
/// d, falling back to the nearest period (earlier on ties). Missing when the
/// point falls outside the raster extent or the cell is NA.
SampleValue sample_nearest(const GridStack& s, const GeoPoint& p, const Date& d);

/// Field selection part of sample_nearest, exposed for the behavior analyses.
const GridField* select_field(const GridStack& s, const Date& d);
const GridField* select_covering_field(const GridStack& s, const Date& d);  // no fallback

struct AreaResult {
    std::int64_t cells = 0;
    double km2 = 0.0;
};

/// Count and cosine-weighted area of cells equal to class_id in a seascape
/// field.
AreaResult seascape_area(const GridField& g, int class_id);

inline constexpr int kSeascapeClassMin = 1;
inline constexpr int kSeascapeClassMax = 30;

/// Catalog name for a seascape class id ("Seascape N" when uncataloged).
std::string seascape_name(int class_id);

}  // namespace vigia
