#pragma once

#include "urbanreach/coverage.hpp"
#include "urbanreach/density.hpp"
#include "urbanreach/geom.hpp"
#include "urbanreach/layers.hpp"
#include "urbanreach/standards.hpp"
#include "urbanreach/voronoi.hpp"

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace urbanreach {

enum class LayerKind { Points, Polygons, Districts };

// Metadata record for a discovered layer file.
struct LayerFile {
  std::string path;
  LayerKind kind = LayerKind::Points;
  std::optional<ServiceCode> service_code;
  int feature_count = 0;
};

using Layer = std::variant<PointLayer, MultiPolygon, std::vector<District>>;

// Read an RFC 7946-structured FeatureCollection with planar coordinates in
// meters. Rings are validated, closed and reoriented (exterior CCW, holes
// CW); duplicate vertices within the snap tolerance are dropped. Files whose
// coordinates all fit a latitude/longitude range trigger a loud warning.
Layer read_layer(const std::string& path, LayerKind expected_kind,
                 std::vector<std::string>* warnings = nullptr);

PointLayer read_point_layer(const std::string& path,
                            std::vector<std::string>* warnings = nullptr);
MultiPolygon read_polygon_layer(const std::string& path,
                                std::vector<std::string>* warnings = nullptr);
std::vector<District> read_districts(const std::string& path,
                                     std::vector<std::string>* warnings = nullptr);

// Writers emit FeatureCollections with coordinates at 3 decimal places
// (mm precision) and deterministic key order.
void write_layer(const PointLayer& layer, const std::string& path);
void write_layer(const MultiPolygon& geometry, const std::string& path);
void write_catchment_cells(std::span<const CatchmentCell> cells, const std::string& path);

// Standards table: CSV mirrors the published table layout (group, service,
// min_km, max_km, 3 decimals); JSON keeps full precision and round-trips.
void write_standards_csv(const StandardsTable& table, const std::string& path);
void write_standards_json(const StandardsTable& table, const std::string& path);
StandardsTable read_standards_json(const std::string& path);

void write_coverage_csv(const CoverageReport& report, const std::string& path);
void write_coverage_json(const CoverageReport& report, const NniResult* nni,
                         const std::string& path);

struct AggregateRow {
  ServiceCode service = ServiceCode::KG;
  double served_km2 = 0.0;
  double served_pct = 0.0;
  double unserved_km2 = 0.0;
  double unserved_pct = 0.0;
};

void write_aggregate_csv(std::span<const AggregateRow> rows, double average_served_pct,
                         const std::string& path);
void write_aggregate_json(std::span<const AggregateRow> rows, double average_served_pct,
                          const std::string& path);

void write_parks_csv(const ParksReport& report, const std::string& path);
void write_parks_json(const ParksReport& report, const std::string& path);

// ESRI ASCII grid; masked cells carry the NODATA value -9999.
void write_ascii_grid(const DensityGrid& grid, const std::string& path);

// Deterministic SVG map: fixed layer order (border outline, built-up gray,
// served green, unserved red, site dots), legend and scale bar. Identical
// inputs produce byte-identical files.
void render_map(const MultiPolygon& border, const MultiPolygon& built_up,
                const MultiPolygon& served, const MultiPolygon& unserved,
                const PointLayer& sites, const std::string& out_path,
                const std::string& title = {});

// Density overlay variant: classed cells colored over the border outline.
void render_density_map(const DensityGrid& grid, const ClassedGrid& classes,
                        const MultiPolygon& border, const std::string& out_path,
                        const std::string& title = {});

}  // namespace urbanreach
