#pragma once

#include "urbanreach/geom.hpp"
#include "urbanreach/service_code.hpp"

#include <optional>
#include <string>
#include <vector>

namespace urbanreach {

// A named set of service facility points (Voronoi sites / buffer centers).
struct PointLayer {
  std::string name;
  std::optional<ServiceCode> service;
  std::vector<Point> points;

  bool empty() const { return points.empty(); }
  std::size_t size() const { return points.size(); }
};

// An administrative division with its population.
struct District {
  std::string name;
  MultiPolygon geometry;
  double population = 0.0;
};

}  // namespace urbanreach
