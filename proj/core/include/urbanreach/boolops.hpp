#pragma once

#include "urbanreach/geom.hpp"
#include "urbanreach/layers.hpp"

#include <span>
#include <vector>

namespace urbanreach {

// Region of points contained in both a and b.
MultiPolygon intersection(const MultiPolygon& a, const MultiPolygon& b);

// Points of a not in the interior of b.
MultiPolygon difference(const MultiPolygon& a, const MultiPolygon& b);

// Dissolve a set of regions into one. Empty input yields an empty region.
MultiPolygon union_all(std::span<const MultiPolygon> parts);
MultiPolygon union_all(const std::vector<MultiPolygon>& parts);

// Union of regular polygons inscribed in the radius-r circle around each
// site. Vertex placement is deterministic: first vertex due east, then
// counterclockwise.
MultiPolygon buffer(std::span<const Point> sites, double radius_km,
                    int segments_per_circle = 64);
MultiPolygon buffer(const PointLayer& sites, double radius_km,
                    int segments_per_circle = 64);

}  // namespace urbanreach
