// Polygon overlay backed by Boost.Geometry behind the library's own
// geometry types; results are normalized (exterior CCW, holes CW) and
// degenerate slivers below kSliverAreaM2 are dropped.

#define BOOST_ALLOW_DEPRECATED_HEADERS

#include "urbanreach/boolops.hpp"

#include "urbanreach/errors.hpp"

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/multi_polygon.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>

#include <cmath>
#include <numbers>

namespace urbanreach {

namespace {

namespace bg = boost::geometry;

using BgPoint = bg::model::d2::point_xy<double>;
// Counterclockwise, closed: matches the library convention plus an explicit
// closing vertex.
using BgPolygon = bg::model::polygon<BgPoint, false, true>;
using BgMultiPolygon = bg::model::multi_polygon<BgPolygon>;

void check_valid_input(const MultiPolygon& g, const char* side) {
  for (const Polygon& part : g.parts) {
    if (part.exterior.vertices.size() < 3) {
      throw ValidationError(std::string("overlay input ") + side +
                            ": ring with fewer than 3 vertices");
    }
    for (const Point& v : part.exterior.vertices) {
      if (!std::isfinite(v.x) || !std::isfinite(v.y)) {
        throw ValidationError(std::string("overlay input ") + side +
                              ": non-finite coordinate");
      }
    }
    for (const Ring& h : part.holes) {
      if (h.vertices.size() < 3) {
        throw ValidationError(std::string("overlay input ") + side +
                              ": hole with fewer than 3 vertices");
      }
    }
  }
}

void append_ring(BgPolygon::ring_type& out, const Ring& in) {
  out.reserve(in.vertices.size() + 1);
  for (const Point& v : in.vertices) out.emplace_back(v.x, v.y);
  if (!in.vertices.empty()) {
    out.emplace_back(in.vertices.front().x, in.vertices.front().y);
  }
}

BgMultiPolygon to_boost(const MultiPolygon& g) {
  BgMultiPolygon out;
  out.reserve(g.parts.size());
  for (const Polygon& part : g.parts) {
    BgPolygon poly;
    append_ring(poly.outer(), part.exterior);
    poly.inners().resize(part.holes.size());
    for (std::size_t i = 0; i < part.holes.size(); ++i) {
      append_ring(poly.inners()[i], part.holes[i]);
    }
    out.push_back(std::move(poly));
  }
  bg::correct(out);
  return out;
}

Ring from_boost_ring(const BgPolygon::ring_type& in) {
  Ring out;
  out.vertices.reserve(in.size());
  for (const BgPoint& v : in) out.vertices.push_back({v.x(), v.y()});
  dedupe_ring(out);
  return out;
}

MultiPolygon from_boost(const BgMultiPolygon& g) {
  MultiPolygon out;
  for (const BgPolygon& poly : g) {
    Polygon part;
    part.exterior = from_boost_ring(poly.outer());
    if (part.exterior.vertices.size() < 3) continue;
    if (ring_area_m2(part.exterior) < kSliverAreaM2) continue;
    for (const auto& inner : poly.inners()) {
      Ring hole = from_boost_ring(inner);
      if (hole.vertices.size() < 3) continue;
      if (ring_area_m2(hole) < kSliverAreaM2) continue;
      part.holes.push_back(std::move(hole));
    }
    normalize_orientation(part);
    out.parts.push_back(std::move(part));
  }
  return out;
}

MultiPolygon union_pair(const MultiPolygon& a, const MultiPolygon& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  BgMultiPolygon out;
  bg::union_(to_boost(a), to_boost(b), out);
  return from_boost(out);
}

// Deterministic divide-and-conquer merge; the tree shape depends only on
// the input order, so results are reproducible run to run.
MultiPolygon union_range(std::span<const MultiPolygon> parts) {
  if (parts.empty()) return {};
  if (parts.size() == 1) return parts[0];
  const std::size_t mid = parts.size() / 2;
  return union_pair(union_range(parts.first(mid)), union_range(parts.subspan(mid)));
}

}  // namespace

MultiPolygon intersection(const MultiPolygon& a, const MultiPolygon& b) {
  check_valid_input(a, "a");
  check_valid_input(b, "b");
  if (a.empty() || b.empty()) return {};
  BgMultiPolygon out;
  bg::intersection(to_boost(a), to_boost(b), out);
  return from_boost(out);
}

MultiPolygon difference(const MultiPolygon& a, const MultiPolygon& b) {
  check_valid_input(a, "a");
  check_valid_input(b, "b");
  if (a.empty()) return {};
  if (b.empty()) return a;
  BgMultiPolygon out;
  bg::difference(to_boost(a), to_boost(b), out);
  return from_boost(out);
}

MultiPolygon union_all(std::span<const MultiPolygon> parts) {
  for (const MultiPolygon& part : parts) check_valid_input(part, "union");
  return union_range(parts);
}

MultiPolygon union_all(const std::vector<MultiPolygon>& parts) {
  return union_all(std::span<const MultiPolygon>(parts));
}

MultiPolygon buffer(std::span<const Point> sites, double radius_km,
                    int segments_per_circle) {
  if (!(radius_km * 1000.0 > kSnapToleranceM)) {
    throw ParameterError("buffer: radius must be positive");
  }
  if (segments_per_circle < 8) {
    throw ParameterError("buffer: segments_per_circle must be at least 8");
  }
  const double radius_m = radius_km * 1000.0;
  const int n = segments_per_circle;

  std::vector<MultiPolygon> disks;
  disks.reserve(sites.size());
  for (const Point& site : sites) {
    Polygon disk;
    disk.exterior.vertices.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      const double angle = 2.0 * std::numbers::pi * k / n;
      disk.exterior.vertices.push_back(
          {site.x + radius_m * std::cos(angle), site.y + radius_m * std::sin(angle)});
    }
    disks.push_back(as_multipolygon(std::move(disk)));
  }
  return union_range(disks);
}

MultiPolygon buffer(const PointLayer& sites, double radius_km, int segments_per_circle) {
  return buffer(std::span<const Point>(sites.points), radius_km, segments_per_circle);
}

}  // namespace urbanreach
