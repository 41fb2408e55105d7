#include "urbanreach/geom.hpp"

#include "urbanreach/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <set>
#include <utility>

namespace urbanreach {

namespace {

double point_segment_distance(const Point& p, const Point& a, const Point& b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  if (len2 <= 0.0) return distance(p, a);
  double t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return distance(p, Point{a.x + t * dx, a.y + t * dy});
}

// Sign of the cross product (b-a) x (c-a); 0 when c lies within `tol` of
// the line through a,b.
int line_side(const Point& a, const Point& b, const Point& c, double tol) {
  const double cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  const double len = std::hypot(b.x - a.x, b.y - a.y);
  if (std::abs(cross) <= tol * std::max(len, tol)) return 0;
  return cross > 0.0 ? 1 : -1;
}

// Proper crossing or collinear overlap between segments pq and rs.
// Shared endpoints and T-touches are not reported.
bool segments_conflict(const Point& p, const Point& q, const Point& r, const Point& s, double tol) {
  const int d1 = line_side(r, s, p, tol);
  const int d2 = line_side(r, s, q, tol);
  const int d3 = line_side(p, q, r, tol);
  const int d4 = line_side(p, q, s, tol);
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0) {
    // Collinear: flag when the 1D overlap is longer than a touch point.
    const bool x_major = std::abs(q.x - p.x) + std::abs(s.x - r.x) >=
                         std::abs(q.y - p.y) + std::abs(s.y - r.y);
    const double p1 = x_major ? p.x : p.y;
    const double q1 = x_major ? q.x : q.y;
    const double r1 = x_major ? r.x : r.y;
    const double s1 = x_major ? s.x : s.y;
    const double lo = std::max(std::min(p1, q1), std::min(r1, s1));
    const double hi = std::min(std::max(p1, q1), std::max(r1, s1));
    return hi - lo > tol;
  }
  return false;
}

void require_finite(const Ring& r, const std::string& context) {
  for (const Point& v : r.vertices) {
    if (!std::isfinite(v.x) || !std::isfinite(v.y)) {
      throw ValidationError(context + ": non-finite coordinate");
    }
  }
}

std::size_t count_distinct(const Ring& r, double tol) {
  std::set<std::pair<std::int64_t, std::int64_t>> cells;
  for (const Point& v : r.vertices) {
    cells.insert({std::llround(v.x / tol), std::llround(v.y / tol)});
  }
  return cells.size();
}

void check_self_intersection(const Ring& r, const std::string& context) {
  const std::size_t n = r.vertices.size();
  if (n < 4) return;  // a triangle cannot self-intersect

  struct Seg {
    std::size_t idx;
    double min_x, max_x;
  };
  std::vector<Seg> segs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = r.vertices[i];
    const Point& b = r.vertices[(i + 1) % n];
    segs[i] = {i, std::min(a.x, b.x), std::max(a.x, b.x)};
  }
  std::sort(segs.begin(), segs.end(),
            [](const Seg& a, const Seg& b) { return a.min_x < b.min_x; });

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (segs[j].min_x > segs[i].max_x + kSnapToleranceM) break;
      const std::size_t si = segs[i].idx;
      const std::size_t sj = segs[j].idx;
      const std::size_t lo = std::min(si, sj);
      const std::size_t hi = std::max(si, sj);
      if (hi - lo == 1 || (lo == 0 && hi == n - 1)) continue;  // adjacent
      const Point& p = r.vertices[si];
      const Point& q = r.vertices[(si + 1) % n];
      const Point& a = r.vertices[sj];
      const Point& b = r.vertices[(sj + 1) % n];
      if (segments_conflict(p, q, a, b, kSnapToleranceM)) {
        throw ValidationError(context + ": self-intersecting ring (segments " +
                              std::to_string(si) + " and " + std::to_string(sj) + ")");
      }
    }
  }
}

}  // namespace

double distance(const Point& a, const Point& b) {
  return std::hypot(b.x - a.x, b.y - a.y);
}

double ring_signed_area_m2(const Ring& r) {
  const std::size_t n = r.vertices.size();
  if (n < 3) return 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = r.vertices[i];
    const Point& b = r.vertices[(i + 1) % n];
    acc += a.x * b.y - b.x * a.y;
  }
  return 0.5 * acc;
}

double ring_area_m2(const Ring& r) { return std::abs(ring_signed_area_m2(r)); }

bool is_ccw(const Ring& r) { return ring_signed_area_m2(r) > 0.0; }

double polygon_area_m2(const Polygon& g) {
  double area = ring_area_m2(g.exterior);
  for (const Ring& h : g.holes) area -= ring_area_m2(h);
  return std::max(area, 0.0);
}

double polygon_area_m2(const MultiPolygon& g) {
  double area = 0.0;
  for (const Polygon& p : g.parts) area += polygon_area_m2(p);
  return area;
}

double polygon_area_km2(const Polygon& g) { return polygon_area_m2(g) / 1e6; }

double polygon_area_km2(const MultiPolygon& g) { return polygon_area_m2(g) / 1e6; }

RingSide classify_point(const Point& p, const Ring& r, double tol) {
  const std::size_t n = r.vertices.size();
  if (n < 3) return RingSide::Outside;

  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = r.vertices[i];
    const Point& b = r.vertices[(i + 1) % n];
    if (point_segment_distance(p, a, b) <= tol) return RingSide::Boundary;
  }

  // Even-odd ray cast toward +x.
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point& a = r.vertices[i];
    const Point& b = r.vertices[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x_cross = (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x;
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside ? RingSide::Inside : RingSide::Outside;
}

bool point_in_polygon(const Point& p, const Polygon& g) {
  const RingSide ext = classify_point(p, g.exterior);
  if (ext == RingSide::Outside) return false;
  if (ext == RingSide::Boundary) return true;
  for (const Ring& h : g.holes) {
    const RingSide side = classify_point(p, h);
    if (side == RingSide::Inside) return false;  // strictly inside a hole
  }
  return true;
}

bool point_in_polygon(const Point& p, const MultiPolygon& g) {
  for (const Polygon& part : g.parts) {
    if (point_in_polygon(p, part)) return true;
  }
  return false;
}

bool point_strictly_in_polygon(const Point& p, const Polygon& g) {
  if (classify_point(p, g.exterior) != RingSide::Inside) return false;
  for (const Ring& h : g.holes) {
    if (classify_point(p, h) != RingSide::Outside) return false;
  }
  return true;
}

double max_distance_to_boundary_km(const Point& site, const Polygon& g) {
  if (!point_in_polygon(site, g)) {
    throw PreconditionError("max_distance_to_boundary: site lies outside the polygon");
  }
  double max_d = 0.0;
  for (const Point& v : g.exterior.vertices) max_d = std::max(max_d, distance(site, v));
  for (const Ring& h : g.holes) {
    for (const Point& v : h.vertices) max_d = std::max(max_d, distance(site, v));
  }
  return max_d / 1000.0;
}

double max_distance_to_boundary_km(const Point& site, const MultiPolygon& g) {
  if (!point_in_polygon(site, g)) {
    throw PreconditionError("max_distance_to_boundary: site lies outside the region");
  }
  double max_d = 0.0;
  for (const Polygon& part : g.parts) {
    for (const Point& v : part.exterior.vertices) max_d = std::max(max_d, distance(site, v));
    for (const Ring& h : part.holes) {
      for (const Point& v : h.vertices) max_d = std::max(max_d, distance(site, v));
    }
  }
  return max_d / 1000.0;
}

Box bounding_box(const Ring& r) {
  Box box{std::numeric_limits<double>::max(), std::numeric_limits<double>::max(),
          std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()};
  for (const Point& v : r.vertices) {
    box.min_x = std::min(box.min_x, v.x);
    box.min_y = std::min(box.min_y, v.y);
    box.max_x = std::max(box.max_x, v.x);
    box.max_y = std::max(box.max_y, v.y);
  }
  return box;
}

Box bounding_box(const Polygon& g) { return bounding_box(g.exterior); }

Box bounding_box(const MultiPolygon& g) {
  Box box{std::numeric_limits<double>::max(), std::numeric_limits<double>::max(),
          std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()};
  for (const Polygon& part : g.parts) {
    const Box b = bounding_box(part);
    box.min_x = std::min(box.min_x, b.min_x);
    box.min_y = std::min(box.min_y, b.min_y);
    box.max_x = std::max(box.max_x, b.max_x);
    box.max_y = std::max(box.max_y, b.max_y);
  }
  return box;
}

void dedupe_ring(Ring& r, double tol) {
  std::vector<Point> out;
  out.reserve(r.vertices.size());
  for (const Point& v : r.vertices) {
    if (out.empty() || !same_point(out.back(), v, tol)) out.push_back(v);
  }
  while (out.size() > 1 && same_point(out.front(), out.back(), tol)) out.pop_back();
  r.vertices = std::move(out);
}

void reverse_ring(Ring& r) { std::reverse(r.vertices.begin(), r.vertices.end()); }

void normalize_orientation(Polygon& g) {
  if (!is_ccw(g.exterior)) reverse_ring(g.exterior);
  for (Ring& h : g.holes) {
    if (is_ccw(h)) reverse_ring(h);
  }
}

void normalize_orientation(MultiPolygon& g) {
  for (Polygon& part : g.parts) normalize_orientation(part);
}

void validate_ring(const Ring& r, const std::string& context) {
  require_finite(r, context);
  if (count_distinct(r, kSnapToleranceM) < 3) {
    throw ValidationError(context + ": ring has fewer than 3 distinct vertices");
  }
  if (ring_area_m2(r) <= 1e-12) {
    throw ValidationError(context + ": ring has zero area");
  }
  check_self_intersection(r, context);
}

void validate_polygon(const Polygon& g, const std::string& context) {
  validate_ring(g.exterior, context + " exterior");
  for (std::size_t i = 0; i < g.holes.size(); ++i) {
    const std::string hole_ctx = context + " hole " + std::to_string(i);
    validate_ring(g.holes[i], hole_ctx);
    for (const Point& v : g.holes[i].vertices) {
      if (classify_point(v, g.exterior) != RingSide::Inside) {
        throw ValidationError(hole_ctx + ": hole not strictly inside the exterior");
      }
    }
    for (std::size_t j = 0; j < i; ++j) {
      for (const Point& v : g.holes[i].vertices) {
        if (classify_point(v, g.holes[j]) == RingSide::Inside) {
          throw ValidationError(hole_ctx + ": overlaps hole " + std::to_string(j));
        }
      }
    }
  }
}

void validate_multipolygon(const MultiPolygon& g, const std::string& context) {
  for (std::size_t i = 0; i < g.parts.size(); ++i) {
    validate_polygon(g.parts[i], context + " part " + std::to_string(i));
  }
  for (std::size_t i = 0; i < g.parts.size(); ++i) {
    for (std::size_t j = 0; j < g.parts.size(); ++j) {
      if (i == j) continue;
      const Box bi = bounding_box(g.parts[i]);
      const Box bj = bounding_box(g.parts[j]);
      if (bi.min_x > bj.max_x || bj.min_x > bi.max_x || bi.min_y > bj.max_y ||
          bj.min_y > bi.max_y) {
        continue;
      }
      for (const Point& v : g.parts[i].exterior.vertices) {
        if (point_strictly_in_polygon(v, g.parts[j])) {
          throw ValidationError(context + ": parts " + std::to_string(i) + " and " +
                                std::to_string(j) + " have overlapping interiors");
        }
      }
    }
  }
}

MultiPolygon as_multipolygon(Polygon part) {
  MultiPolygon mp;
  mp.parts.push_back(std::move(part));
  return mp;
}

MultiPolygon translated(const MultiPolygon& g, double dx, double dy) {
  MultiPolygon out = g;
  for (Polygon& part : out.parts) {
    for (Point& v : part.exterior.vertices) {
      v.x += dx;
      v.y += dy;
    }
    for (Ring& h : part.holes) {
      for (Point& v : h.vertices) {
        v.x += dx;
        v.y += dy;
      }
    }
  }
  return out;
}

MultiPolygon scaled(const MultiPolygon& g, double factor) {
  MultiPolygon out = g;
  for (Polygon& part : out.parts) {
    for (Point& v : part.exterior.vertices) {
      v.x *= factor;
      v.y *= factor;
    }
    for (Ring& h : part.holes) {
      for (Point& v : h.vertices) {
        v.x *= factor;
        v.y *= factor;
      }
    }
  }
  return out;
}

}  // namespace urbanreach
