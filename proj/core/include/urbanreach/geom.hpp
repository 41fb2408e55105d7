#pragma once

#include <cmath>
#include <string>
#include <vector>

namespace urbanreach {

// Vertex coincidence snap tolerance in meters. Coordinates closer than this
// are the same location everywhere in the library.
inline constexpr double kSnapToleranceM = 1e-6;

// Overlay outputs drop degenerate parts smaller than this (m^2).
inline constexpr double kSliverAreaM2 = 1.0;

// Planar point: easting/northing in meters (projected coordinates).
struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline bool same_point(const Point& a, const Point& b, double tol = kSnapToleranceM) {
  return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol;
}

// Closed ring, stored without the repeated closing vertex.
struct Ring {
  std::vector<Point> vertices;
};

// Exterior ring counterclockwise, holes clockwise.
struct Polygon {
  Ring exterior;
  std::vector<Ring> holes;
};

struct MultiPolygon {
  std::vector<Polygon> parts;
  bool empty() const { return parts.empty(); }
};

// A border, built-up or district polygon layer.
using PolygonSet = MultiPolygon;

struct Box {
  double min_x = 0.0;
  double min_y = 0.0;
  double max_x = 0.0;
  double max_y = 0.0;
  double width() const { return max_x - min_x; }
  double height() const { return max_y - min_y; }
};

enum class RingSide { Outside, Boundary, Inside };

// Euclidean distance in meters; symmetric, zero iff the points coincide.
double distance(const Point& a, const Point& b);

// Shoelace area; positive when the ring runs counterclockwise.
double ring_signed_area_m2(const Ring& r);
double ring_area_m2(const Ring& r);
bool is_ccw(const Ring& r);

double polygon_area_m2(const Polygon& g);
double polygon_area_m2(const MultiPolygon& g);

// Exterior area minus holes, summed over parts, reported in km^2.
double polygon_area_km2(const Polygon& g);
double polygon_area_km2(const MultiPolygon& g);

// Ray-cast classification with an explicit boundary band of width `tol`.
RingSide classify_point(const Point& p, const Ring& r, double tol = kSnapToleranceM);

// Closed-region containment: boundary points count as inside, points
// strictly inside a hole do not.
bool point_in_polygon(const Point& p, const Polygon& g);
bool point_in_polygon(const Point& p, const MultiPolygon& g);

// Interior containment: boundary points do not count.
bool point_strictly_in_polygon(const Point& p, const Polygon& g);

// Maximum distance from an interior site to the region boundary, in km.
// Point-to-segment distance is maximized at an endpoint, so the maximum
// over ring vertices is exact (non-convex polygons included).
double max_distance_to_boundary_km(const Point& site, const Polygon& g);
double max_distance_to_boundary_km(const Point& site, const MultiPolygon& g);

Box bounding_box(const Ring& r);
Box bounding_box(const Polygon& g);
Box bounding_box(const MultiPolygon& g);

// Drop consecutive vertices closer than the snap tolerance, including a
// trailing duplicate of the first vertex.
void dedupe_ring(Ring& r, double tol = kSnapToleranceM);

void reverse_ring(Ring& r);

// Reorient to the storage invariant: exterior CCW, holes CW.
void normalize_orientation(Polygon& g);
void normalize_orientation(MultiPolygon& g);

// Throw ValidationError when an invariant is broken; `context` names the
// offending object in the message.
void validate_ring(const Ring& r, const std::string& context);
void validate_polygon(const Polygon& g, const std::string& context);
void validate_multipolygon(const MultiPolygon& g, const std::string& context);

MultiPolygon as_multipolygon(Polygon part);

MultiPolygon translated(const MultiPolygon& g, double dx, double dy);
MultiPolygon scaled(const MultiPolygon& g, double factor);

}  // namespace urbanreach
