#include "urbanreach/errors.hpp"
#include "urbanreach/io.hpp"

#include "format.hpp"

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace urbanreach {

namespace {

using nlohmann::json;

json parse_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": malformed JSON at byte " + std::to_string(e.byte) + ": " +
                         e.what(),
                     e.byte);
  }
}

const json& feature_array(const json& doc, const std::string& path) {
  if (!doc.is_object() || doc.value("type", std::string{}) != "FeatureCollection" ||
      !doc.contains("features") || !doc["features"].is_array()) {
    throw ValidationError(path + ": not a FeatureCollection");
  }
  return doc["features"];
}

Point parse_position(const json& j, const std::string& ctx) {
  if (!j.is_array() || j.size() < 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ValidationError(ctx + ": position must be an array of two numbers");
  }
  const Point p{j[0].get<double>(), j[1].get<double>()};
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
    throw ValidationError(ctx + ": non-finite coordinate");
  }
  return p;
}

Ring parse_ring(const json& j, const std::string& ctx) {
  if (!j.is_array() || j.size() < 4) {
    throw ValidationError(ctx + ": ring needs at least 4 positions");
  }
  Ring ring;
  ring.vertices.reserve(j.size());
  for (const json& pos : j) ring.vertices.push_back(parse_position(pos, ctx));
  if (!same_point(ring.vertices.front(), ring.vertices.back())) {
    throw ValidationError(ctx + ": ring is not closed");
  }
  dedupe_ring(ring);
  return ring;
}

Polygon parse_polygon_coords(const json& j, const std::string& ctx) {
  if (!j.is_array() || j.empty()) {
    throw ValidationError(ctx + ": polygon needs at least one ring");
  }
  Polygon poly;
  poly.exterior = parse_ring(j[0], ctx + " exterior");
  for (std::size_t i = 1; i < j.size(); ++i) {
    poly.holes.push_back(parse_ring(j[i], ctx + " hole " + std::to_string(i - 1)));
  }
  normalize_orientation(poly);
  validate_polygon(poly, ctx);
  return poly;
}

MultiPolygon parse_feature_geometry(const json& geom, const std::string& ctx) {
  const std::string type = geom.value("type", std::string{});
  if (!geom.contains("coordinates")) {
    throw ValidationError(ctx + ": geometry has no coordinates");
  }
  MultiPolygon out;
  if (type == "Polygon") {
    out.parts.push_back(parse_polygon_coords(geom["coordinates"], ctx));
  } else {
    for (std::size_t i = 0; i < geom["coordinates"].size(); ++i) {
      out.parts.push_back(parse_polygon_coords(geom["coordinates"][i],
                                               ctx + " part " + std::to_string(i)));
    }
  }
  return out;
}

std::string geometry_type(const json& feature) {
  if (!feature.is_object() || !feature.contains("geometry") ||
      !feature["geometry"].is_object()) {
    return {};
  }
  return feature["geometry"].value("type", std::string{});
}

void check_kinds(const json& features, const std::string& path, LayerKind expected) {
  std::vector<std::size_t> offending;
  for (std::size_t i = 0; i < features.size(); ++i) {
    const std::string type = geometry_type(features[i]);
    const bool ok = expected == LayerKind::Points
                        ? type == "Point"
                        : (type == "Polygon" || type == "MultiPolygon");
    if (!ok) offending.push_back(i);
  }
  if (!offending.empty()) {
    std::string which;
    for (std::size_t i : offending) {
      if (!which.empty()) which += ", ";
      which += std::to_string(i);
    }
    throw KindMismatchError(path + ": expected " +
                            (expected == LayerKind::Points ? "Point" : "Polygon") +
                            " features; offending feature indices: " + which);
  }
}

// Coordinates that all fit latitude/longitude ranges are probably not
// projected meters.
void warn_if_geographic(const json& features, const std::string& path,
                        std::vector<std::string>* warnings) {
  if (warnings == nullptr || features.empty()) return;
  bool any = false;
  std::function<bool(const json&)> scan = [&](const json& coords) -> bool {
    if (coords.is_array() && coords.size() >= 2 && coords[0].is_number() &&
        coords[1].is_number()) {
      any = true;
      return std::abs(coords[0].get<double>()) <= 180.0 &&
             std::abs(coords[1].get<double>()) <= 90.0;
    }
    if (coords.is_array()) {
      for (const json& sub : coords) {
        if (!scan(sub)) return false;
      }
    }
    return true;
  };
  for (const json& f : features) {
    if (!f.is_object() || !f.contains("geometry") || !f["geometry"].is_object() ||
        !f["geometry"].contains("coordinates")) {
      return;
    }
    if (!scan(f["geometry"]["coordinates"])) return;
  }
  if (any) {
    warnings->push_back(path +
                        ": all coordinates fit a latitude/longitude range; planar "
                        "meters are expected and no reprojection is performed");
  }
}

std::string layer_name_from(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

// --- writers ---------------------------------------------------------------

void write_coordinate(std::ostream& out, const Point& p) {
  out << '[' << detail::fixed(p.x, 3) << ',' << detail::fixed(p.y, 3) << ']';
}

void write_ring(std::ostream& out, const Ring& ring) {
  out << '[';
  for (std::size_t i = 0; i < ring.vertices.size(); ++i) {
    if (i > 0) out << ',';
    write_coordinate(out, ring.vertices[i]);
  }
  if (!ring.vertices.empty()) {
    out << ',';
    write_coordinate(out, ring.vertices.front());  // close the ring
  }
  out << ']';
}

void write_polygon_coords(std::ostream& out, const Polygon& poly) {
  out << '[';
  write_ring(out, poly.exterior);
  for (const Ring& hole : poly.holes) {
    out << ',';
    write_ring(out, hole);
  }
  out << ']';
}

void write_multipolygon_coords(std::ostream& out, const MultiPolygon& geometry) {
  out << '[';
  for (std::size_t i = 0; i < geometry.parts.size(); ++i) {
    if (i > 0) out << ',';
    write_polygon_coords(out, geometry.parts[i]);
  }
  out << ']';
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  return out;
}

}  // namespace

Layer read_layer(const std::string& path, LayerKind expected_kind,
                 std::vector<std::string>* warnings) {
  const json doc = parse_document(path);
  const json& features = feature_array(doc, path);
  check_kinds(features, path, expected_kind);
  warn_if_geographic(features, path, warnings);

  if (expected_kind == LayerKind::Points) {
    PointLayer layer;
    layer.name = layer_name_from(path);
    layer.points.reserve(features.size());
    for (std::size_t i = 0; i < features.size(); ++i) {
      layer.points.push_back(parse_position(features[i]["geometry"]["coordinates"],
                                            path + " feature " + std::to_string(i)));
    }
    return layer;
  }

  if (expected_kind == LayerKind::Polygons) {
    MultiPolygon combined;
    for (std::size_t i = 0; i < features.size(); ++i) {
      MultiPolygon part = parse_feature_geometry(features[i]["geometry"],
                                                 path + " feature " + std::to_string(i));
      for (Polygon& p : part.parts) combined.parts.push_back(std::move(p));
    }
    return combined;
  }

  std::vector<District> districts;
  for (std::size_t i = 0; i < features.size(); ++i) {
    const std::string ctx = path + " feature " + std::to_string(i);
    const json& feature = features[i];
    if (!feature.contains("properties") || !feature["properties"].is_object()) {
      throw ValidationError(ctx + ": district feature has no properties");
    }
    const json& props = feature["properties"];
    if (!props.contains("name") || !props["name"].is_string()) {
      throw ValidationError(ctx + ": district feature missing string property 'name'");
    }
    if (!props.contains("population") || !props["population"].is_number()) {
      throw ValidationError(ctx + ": district feature missing numeric property 'population'");
    }
    District district;
    district.name = props["name"].get<std::string>();
    district.population = props["population"].get<double>();
    if (district.population < 0) {
      throw ValidationError(ctx + ": negative population");
    }
    district.geometry = parse_feature_geometry(feature["geometry"], ctx);
    districts.push_back(std::move(district));
  }
  return districts;
}

PointLayer read_point_layer(const std::string& path, std::vector<std::string>* warnings) {
  return std::get<PointLayer>(read_layer(path, LayerKind::Points, warnings));
}

MultiPolygon read_polygon_layer(const std::string& path, std::vector<std::string>* warnings) {
  return std::get<MultiPolygon>(read_layer(path, LayerKind::Polygons, warnings));
}

std::vector<District> read_districts(const std::string& path,
                                     std::vector<std::string>* warnings) {
  return std::get<std::vector<District>>(read_layer(path, LayerKind::Districts, warnings));
}

void write_layer(const PointLayer& layer, const std::string& path) {
  std::ofstream out = open_output(path);
  out << "{\"type\":\"FeatureCollection\",\"features\":[";
  for (std::size_t i = 0; i < layer.points.size(); ++i) {
    if (i > 0) out << ',';
    out << "\n{\"type\":\"Feature\",\"properties\":{";
    if (layer.service.has_value()) {
      out << "\"service\":\"" << to_string(*layer.service) << '"';
    }
    out << "},\"geometry\":{\"type\":\"Point\",\"coordinates\":";
    write_coordinate(out, layer.points[i]);
    out << "}}";
  }
  out << "\n]}\n";
}

void write_layer(const MultiPolygon& geometry, const std::string& path) {
  std::ofstream out = open_output(path);
  out << "{\"type\":\"FeatureCollection\",\"features\":[";
  if (!geometry.empty()) {
    out << "\n{\"type\":\"Feature\",\"properties\":{},\"geometry\":"
        << "{\"type\":\"MultiPolygon\",\"coordinates\":";
    write_multipolygon_coords(out, geometry);
    out << "}}";
  }
  out << "\n]}\n";
}

void write_catchment_cells(std::span<const CatchmentCell> cells, const std::string& path) {
  std::ofstream out = open_output(path);
  out << "{\"type\":\"FeatureCollection\",\"features\":[";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const CatchmentCell& cell = cells[i];
    if (i > 0) out << ',';
    out << "\n{\"type\":\"Feature\",\"properties\":{"
        << "\"site_index\":" << cell.site_index << ","
        << "\"area_km2\":" << detail::shortest(cell.area_km2) << ","
        << "\"coverage_distance_km\":" << detail::shortest(cell.coverage_distance_km)
        << "},\"geometry\":{\"type\":\"MultiPolygon\",\"coordinates\":";
    write_multipolygon_coords(out, cell.cell);
    out << "}}";
  }
  out << "\n]}\n";
}

}  // namespace urbanreach
