#include "urbanreach/voronoi.hpp"

#include "urbanreach/boolops.hpp"
#include "urbanreach/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <utility>

namespace urbanreach {

namespace {

// Merge sites within the snap tolerance, keeping the first occurrence.
// Returns the retained points and their original layer indices.
std::pair<std::vector<Point>, std::vector<int>> dedupe_sites(
    std::span<const Point> sites, std::vector<std::string>* merged_log) {
  std::vector<Point> kept;
  std::vector<int> original_index;
  std::map<std::pair<std::int64_t, std::int64_t>, int> seen;
  int merged = 0;
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const std::pair<std::int64_t, std::int64_t> key{
        std::llround(sites[i].x / kSnapToleranceM),
        std::llround(sites[i].y / kSnapToleranceM)};
    if (seen.contains(key)) {
      ++merged;
      continue;
    }
    seen.emplace(key, static_cast<int>(kept.size()));
    kept.push_back(sites[i]);
    original_index.push_back(static_cast<int>(i));
  }
  if (merged > 0 && merged_log != nullptr) {
    merged_log->push_back("merged " + std::to_string(merged) +
                          " duplicate site(s) within snap tolerance");
  }
  return {std::move(kept), std::move(original_index)};
}

double cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool all_collinear(const std::vector<Point>& pts) {
  if (pts.size() < 3) return true;
  // Pick the pair (0, k) with the largest spread as the reference line.
  std::size_t far = 1;
  double best = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double d = distance(pts[0], pts[i]);
    if (d > best) {
      best = d;
      far = i;
    }
  }
  if (best <= kSnapToleranceM) return true;
  for (const Point& p : pts) {
    const double c = std::abs(cross(pts[0], pts[far], p));
    if (c > kSnapToleranceM * best) return false;
  }
  return true;
}

// --- Bowyer-Watson ---------------------------------------------------------

struct Tri {
  int a, b, c;        // CCW vertex indices
  bool alive = true;
};

bool incircle_det(const Point& pa, const Point& pb, const Point& pc, const Point& pd) {
  const long double adx = pa.x - pd.x;
  const long double ady = pa.y - pd.y;
  const long double bdx = pb.x - pd.x;
  const long double bdy = pb.y - pd.y;
  const long double cdx = pc.x - pd.x;
  const long double cdy = pc.y - pd.y;

  const long double ad2 = adx * adx + ady * ady;
  const long double bd2 = bdx * bdx + bdy * bdy;
  const long double cd2 = cdx * cdx + cdy * cdy;

  const long double det = adx * (bdy * cd2 - cdy * bd2) -
                          ady * (bdx * cd2 - cdx * bd2) +
                          ad2 * (bdx * cdy - cdx * bdy);

  // Cocircular within tolerance counts as outside, so insertion order
  // breaks ties deterministically.
  const long double mag =
      std::max({std::abs(adx), std::abs(ady), std::abs(bdx), std::abs(bdy),
                std::abs(cdx), std::abs(cdy), (long double)1.0});
  const long double tol = 1e-12L * mag * mag * mag * mag;
  return det > tol;
}

}  // namespace

bool in_circumcircle(const Point& a, const Point& b, const Point& c, const Point& d) {
  // Expect CCW orientation; flip if needed so the determinant sign is stable.
  if (cross(a, b, c) < 0.0) return incircle_det(a, c, b, d);
  return incircle_det(a, b, c, d);
}

Triangulation delaunay(const std::vector<Point>& sites) {
  auto [pts, original] = dedupe_sites(sites, nullptr);
  if (pts.size() < 3) {
    throw DegenerateInputError("delaunay: fewer than 3 distinct sites");
  }
  if (all_collinear(pts)) {
    throw DegenerateInputError("delaunay: all sites are collinear");
  }

  // Super-triangle well clear of the data extent.
  Box box{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
  for (const Point& p : pts) {
    box.min_x = std::min(box.min_x, p.x);
    box.min_y = std::min(box.min_y, p.y);
    box.max_x = std::max(box.max_x, p.x);
    box.max_y = std::max(box.max_y, p.y);
  }
  const double span = std::max({box.width(), box.height(), 1.0});
  const double cx = 0.5 * (box.min_x + box.max_x);
  const double cy = 0.5 * (box.min_y + box.max_y);

  std::vector<Point> verts = pts;
  const int s0 = static_cast<int>(verts.size());
  verts.push_back({cx - 50.0 * span, cy - 30.0 * span});
  verts.push_back({cx + 50.0 * span, cy - 30.0 * span});
  verts.push_back({cx, cy + 50.0 * span});

  std::vector<Tri> tris;
  tris.push_back({s0, s0 + 1, s0 + 2});

  for (int p = 0; p < static_cast<int>(pts.size()); ++p) {
    // Cavity: all triangles whose circumcircle strictly contains the point.
    std::vector<int> bad;
    for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
      if (!tris[t].alive) continue;
      if (incircle_det(verts[tris[t].a], verts[tris[t].b], verts[tris[t].c], verts[p])) {
        bad.push_back(t);
      }
    }
    // Boundary edges of the cavity appear exactly once.
    std::map<std::pair<int, int>, int> edge_count;
    auto add_edge = [&edge_count](int u, int v) {
      const auto key = std::minmax(u, v);
      edge_count[{key.first, key.second}] += 1;
    };
    for (int t : bad) {
      add_edge(tris[t].a, tris[t].b);
      add_edge(tris[t].b, tris[t].c);
      add_edge(tris[t].c, tris[t].a);
      tris[t].alive = false;
    }
    for (int t : bad) {
      const std::array<std::pair<int, int>, 3> edges = {
          std::pair{tris[t].a, tris[t].b}, std::pair{tris[t].b, tris[t].c},
          std::pair{tris[t].c, tris[t].a}};
      for (const auto& [u, v] : edges) {
        const auto key = std::minmax(u, v);
        if (edge_count[{key.first, key.second}] != 1) continue;
        Tri fresh{u, v, p};
        if (cross(verts[fresh.a], verts[fresh.b], verts[fresh.c]) < 0.0) {
          std::swap(fresh.b, fresh.c);
        }
        tris.push_back(fresh);
      }
    }
  }

  Triangulation out;
  out.sites = std::move(pts);
  for (const Tri& t : tris) {
    if (!t.alive) continue;
    if (t.a >= s0 || t.b >= s0 || t.c >= s0) continue;  // touches super-triangle
    out.triangles.push_back({t.a, t.b, t.c});
  }
  return out;
}

namespace {

// Sutherland-Hodgman clip of a convex polygon against the half-plane
// n . p <= d. Returns the clipped polygon (possibly empty).
std::vector<Point> clip_halfplane(const std::vector<Point>& poly, double nx, double ny,
                                  double d) {
  std::vector<Point> out;
  const std::size_t n = poly.size();
  if (n == 0) return out;
  out.reserve(n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    const Point& cur = poly[i];
    const Point& nxt = poly[(i + 1) % n];
    const double fc = nx * cur.x + ny * cur.y - d;
    const double fn = nx * nxt.x + ny * nxt.y - d;
    if (fc <= 0.0) {
      out.push_back(cur);
      if (fn > 0.0) {
        const double t = fc / (fc - fn);
        out.push_back({cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)});
      }
    } else if (fn <= 0.0) {
      const double t = fc / (fc - fn);
      out.push_back({cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)});
    }
  }
  return out;
}

}  // namespace

std::vector<CatchmentCell> voronoi_cells(const PointLayer& layer,
                                         const MultiPolygon& boundary,
                                         std::vector<std::string>* warnings) {
  if (layer.empty()) throw ParameterError("voronoi_cells: empty site layer");
  if (boundary.empty()) throw ParameterError("voronoi_cells: empty boundary");

  auto [sites, original] = dedupe_sites(layer.points, warnings);

  // Reject sites outside the boundary, keeping track of layer indices.
  std::vector<Point> kept;
  std::vector<int> kept_index;
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (point_in_polygon(sites[i], boundary)) {
      kept.push_back(sites[i]);
      kept_index.push_back(original[i]);
    } else if (warnings != nullptr) {
      warnings->push_back("site " + std::to_string(original[i]) + " of layer '" +
                          layer.name + "' lies outside the boundary; excluded");
    }
  }
  if (kept.empty()) {
    throw ParameterError("voronoi_cells: no sites inside the boundary");
  }

  // Start every cell from a frame comfortably containing the boundary, clip
  // by perpendicular-bisector half-planes (nearest sites first, pruned once
  // bisectors can no longer reach the shrinking cell), then clip to the
  // boundary itself.
  const Box frame = bounding_box(boundary);
  const double margin = 0.1 * std::max({frame.width(), frame.height(), 1.0}) + 1.0;
  const std::vector<Point> frame_poly = {
      {frame.min_x - margin, frame.min_y - margin},
      {frame.max_x + margin, frame.min_y - margin},
      {frame.max_x + margin, frame.max_y + margin},
      {frame.min_x - margin, frame.max_y + margin}};

  std::vector<CatchmentCell> cells;
  cells.reserve(kept.size());

  std::vector<int> order(kept.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);

  for (std::size_t i = 0; i < kept.size(); ++i) {
    const Point site = kept[i];

    std::vector<int> others = order;
    others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
    std::sort(others.begin(), others.end(), [&](int a, int b) {
      const double da = distance(site, kept[a]);
      const double db = distance(site, kept[b]);
      if (da != db) return da < db;
      return a < b;
    });

    std::vector<Point> cell_poly = frame_poly;
    for (int j : others) {
      if (cell_poly.empty()) break;
      double max_reach = 0.0;
      for (const Point& v : cell_poly) max_reach = std::max(max_reach, distance(site, v));
      const Point& other = kept[static_cast<std::size_t>(j)];
      if (0.5 * distance(site, other) > max_reach) break;  // sorted: rest prune too
      const double nx = other.x - site.x;
      const double ny = other.y - site.y;
      const double d = 0.5 * (nx * (site.x + other.x) + ny * (site.y + other.y));
      cell_poly = clip_halfplane(cell_poly, nx, ny, d);
    }

    Ring ring;
    ring.vertices = std::move(cell_poly);
    dedupe_ring(ring);
    if (ring.vertices.size() < 3) continue;  // degenerate sliver cell

    Polygon unclipped;
    unclipped.exterior = std::move(ring);
    MultiPolygon clipped = intersection(as_multipolygon(std::move(unclipped)), boundary);
    if (clipped.empty()) {
      if (warnings != nullptr) {
        warnings->push_back("cell of site " + std::to_string(kept_index[i]) +
                            " degenerated to a sliver at the boundary; dropped");
      }
      continue;
    }

    CatchmentCell cell;
    cell.site_index = kept_index[i];
    cell.site = site;
    cell.cell = std::move(clipped);
    cells.push_back(std::move(cell));
  }

  catchment_metrics(cells);
  return cells;
}

std::vector<CatchmentMetric> catchment_metrics(std::vector<CatchmentCell>& cells) {
  std::vector<CatchmentMetric> out;
  out.reserve(cells.size());
  for (CatchmentCell& cell : cells) {
    cell.area_km2 = polygon_area_km2(cell.cell);
    cell.coverage_distance_km = max_distance_to_boundary_km(cell.site, cell.cell);
    out.push_back({cell.area_km2, cell.coverage_distance_km});
  }
  return out;
}

}  // namespace urbanreach
