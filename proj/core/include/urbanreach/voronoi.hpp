#pragma once

#include "urbanreach/geom.hpp"
#include "urbanreach/layers.hpp"

#include <array>
#include <span>
#include <string>
#include <vector>

namespace urbanreach {

// Delaunay triangulation over deduplicated sites. Triangle vertices are
// indices into `sites`, counterclockwise.
struct Triangulation {
  std::vector<Point> sites;
  std::vector<std::array<int, 3>> triangles;
};

// One clipped Voronoi cell with its generator site and catchment metrics.
// The clipped cell may split into several parts inside a non-convex
// boundary; all parts belong to the same catchment.
struct CatchmentCell {
  int site_index = 0;  // index into the input layer (first occurrence on merge)
  Point site;
  MultiPolygon cell;
  double area_km2 = 0.0;
  double coverage_distance_km = 0.0;
};

struct CatchmentMetric {
  double area_km2 = 0.0;
  double coverage_distance_km = 0.0;
};

// Bowyer-Watson construction. Duplicate sites within the snap tolerance are
// merged first; fewer than 3 distinct sites or a fully collinear set throws
// DegenerateInputError.
Triangulation delaunay(const std::vector<Point>& sites);

// Strictly-inside circumcircle test for a counterclockwise triangle (a,b,c).
// Exposed for property checks.
bool in_circumcircle(const Point& a, const Point& b, const Point& c, const Point& d);

// One cell per retained site, clipped to the boundary. Sites outside the
// boundary are excluded with a warning; duplicates within the snap tolerance
// are merged (first occurrence kept). Cells partition the boundary.
std::vector<CatchmentCell> voronoi_cells(const PointLayer& layer,
                                         const MultiPolygon& boundary,
                                         std::vector<std::string>* warnings = nullptr);

// Recompute and attach area and coverage distance for each cell.
std::vector<CatchmentMetric> catchment_metrics(std::vector<CatchmentCell>& cells);

}  // namespace urbanreach
