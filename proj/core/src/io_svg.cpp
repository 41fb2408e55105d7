#include "urbanreach/errors.hpp"
#include "urbanreach/io.hpp"

#include "format.hpp"

#include <array>
#include <fstream>
#include <sstream>

namespace urbanreach {

namespace {

constexpr double kPagePx = 1000.0;
constexpr double kMarginPx = 40.0;

// Linear world-to-page transform with preserved aspect ratio and y flip.
struct PageTransform {
  double scale = 1.0;  // px per meter
  double offset_x = 0.0;
  double offset_y = 0.0;

  double px(double wx) const { return offset_x + wx * scale; }
  double py(double wy) const { return offset_y - wy * scale; }
};

PageTransform fit_viewport(const Box& world) {
  PageTransform t;
  const double usable = kPagePx - 2.0 * kMarginPx;
  const double w = std::max(world.width(), 1.0);
  const double h = std::max(world.height(), 1.0);
  t.scale = std::min(usable / w, usable / h);
  t.offset_x = 0.5 * (kPagePx - (world.min_x + world.max_x) * t.scale);
  t.offset_y = 0.5 * (kPagePx + (world.min_y + world.max_y) * t.scale);
  return t;
}

std::string path_data(const MultiPolygon& g, const PageTransform& t) {
  std::ostringstream d;
  auto ring_path = [&d, &t](const Ring& ring) {
    for (std::size_t i = 0; i < ring.vertices.size(); ++i) {
      d << (i == 0 ? 'M' : 'L') << detail::fixed(t.px(ring.vertices[i].x), 2) << ' '
        << detail::fixed(t.py(ring.vertices[i].y), 2);
    }
    d << 'Z';
  };
  for (const Polygon& part : g.parts) {
    ring_path(part.exterior);
    for (const Ring& hole : part.holes) ring_path(hole);
  }
  return d.str();
}

void emit_region(std::ostream& out, const MultiPolygon& g, const PageTransform& t,
                 const std::string& fill, const std::string& stroke, double opacity) {
  if (g.empty()) return;
  out << "<path d=\"" << path_data(g, t) << "\" fill=\"" << fill
      << "\" fill-rule=\"evenodd\"";
  if (opacity < 1.0) out << " fill-opacity=\"" << detail::fixed(opacity, 2) << '"';
  if (!stroke.empty()) out << " stroke=\"" << stroke << "\" stroke-width=\"1\"";
  out << "/>\n";
}

void emit_header(std::ostream& out) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1000\" "
         "height=\"1000\" viewBox=\"0 0 1000 1000\" "
         "preserveAspectRatio=\"xMidYMid meet\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"#ffffff\"/>\n";
}

void emit_title(std::ostream& out, const std::string& title) {
  if (title.empty()) return;
  out << "<text x=\"40\" y=\"28\" font-family=\"sans-serif\" font-size=\"20\" "
         "fill=\"#111111\">"
      << title << "</text>\n";
}

// Scale bar: the longest round kilometre length that stays under 220 px.
void emit_scale_bar(std::ostream& out, const PageTransform& t) {
  static constexpr std::array<double, 10> kCandidatesKm = {0.1, 0.2, 0.5, 1, 2,
                                                           5,   10,  20, 50, 100};
  double chosen_km = kCandidatesKm.front();
  for (double km : kCandidatesKm) {
    if (km * 1000.0 * t.scale <= 220.0) chosen_km = km;
  }
  const double len_px = chosen_km * 1000.0 * t.scale;
  const double x0 = 40.0;
  const double y0 = 972.0;
  out << "<g id=\"scalebar\">\n"
      << "<line x1=\"" << detail::fixed(x0, 2) << "\" y1=\"" << detail::fixed(y0, 2)
      << "\" x2=\"" << detail::fixed(x0 + len_px, 2) << "\" y2=\"" << detail::fixed(y0, 2)
      << "\" stroke=\"#111111\" stroke-width=\"3\"/>\n"
      << "<line x1=\"" << detail::fixed(x0, 2) << "\" y1=\"" << detail::fixed(y0 - 6, 2)
      << "\" x2=\"" << detail::fixed(x0, 2) << "\" y2=\"" << detail::fixed(y0 + 6, 2)
      << "\" stroke=\"#111111\" stroke-width=\"2\"/>\n"
      << "<line x1=\"" << detail::fixed(x0 + len_px, 2) << "\" y1=\""
      << detail::fixed(y0 - 6, 2) << "\" x2=\"" << detail::fixed(x0 + len_px, 2)
      << "\" y2=\"" << detail::fixed(y0 + 6, 2)
      << "\" stroke=\"#111111\" stroke-width=\"2\"/>\n"
      << "<text x=\"" << detail::fixed(x0 + len_px / 2.0, 2) << "\" y=\""
      << detail::fixed(y0 - 10, 2)
      << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" "
         "fill=\"#111111\">"
      << detail::shortest(chosen_km) << " km</text>\n"
      << "</g>\n";
}

struct LegendEntry {
  std::string swatch;  // fill color, empty = outline only
  std::string label;
};

void emit_legend(std::ostream& out, const std::vector<LegendEntry>& entries) {
  const double x0 = 740.0;
  const double y0 = 20.0;
  const double row_h = 24.0;
  const double height = 16.0 + row_h * static_cast<double>(entries.size());
  out << "<g id=\"legend\">\n"
      << "<rect x=\"" << detail::fixed(x0, 2) << "\" y=\"" << detail::fixed(y0, 2)
      << "\" width=\"240\" height=\"" << detail::fixed(height, 2)
      << "\" fill=\"#ffffff\" stroke=\"#333333\"/>\n";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const double ry = y0 + 10.0 + row_h * static_cast<double>(i);
    if (entries[i].swatch.empty()) {
      out << "<rect x=\"" << detail::fixed(x0 + 10, 2) << "\" y=\"" << detail::fixed(ry, 2)
          << "\" width=\"16\" height=\"16\" fill=\"none\" stroke=\"#333333\" "
             "stroke-width=\"2\"/>\n";
    } else {
      out << "<rect x=\"" << detail::fixed(x0 + 10, 2) << "\" y=\"" << detail::fixed(ry, 2)
          << "\" width=\"16\" height=\"16\" fill=\"" << entries[i].swatch << "\"/>\n";
    }
    out << "<text x=\"" << detail::fixed(x0 + 34, 2) << "\" y=\""
        << detail::fixed(ry + 13, 2)
        << "\" font-family=\"sans-serif\" font-size=\"14\" fill=\"#111111\">"
        << entries[i].label << "</text>\n";
  }
  out << "</g>\n";
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  return out;
}

}  // namespace

void render_map(const MultiPolygon& border, const MultiPolygon& built_up,
                const MultiPolygon& served, const MultiPolygon& unserved,
                const PointLayer& sites, const std::string& out_path,
                const std::string& title) {
  if (border.empty()) throw ParameterError("render_map: empty border");

  const PageTransform t = fit_viewport(bounding_box(border));
  std::ofstream out = open_output(out_path);
  emit_header(out);

  // Fixed layer order: border, built-up, served, unserved, sites.
  emit_region(out, border, t, "none", "#333333", 1.0);
  emit_region(out, built_up, t, "#cccccc", "", 1.0);
  emit_region(out, served, t, "#2e7d32", "", 0.65);
  emit_region(out, unserved, t, "#c62828", "", 0.65);
  for (const Point& site : sites.points) {
    out << "<circle cx=\"" << detail::fixed(t.px(site.x), 2) << "\" cy=\""
        << detail::fixed(t.py(site.y), 2) << "\" r=\"3\" fill=\"#111111\"/>\n";
  }

  emit_title(out, title);
  emit_legend(out, {{"", "City border"},
                    {"#cccccc", "Built-up area"},
                    {"#2e7d32", "Served area"},
                    {"#c62828", "Unserved area"},
                    {"#111111", "Facility"}});
  emit_scale_bar(out, t);
  out << "</svg>\n";
}

void render_density_map(const DensityGrid& grid, const ClassedGrid& classes,
                        const MultiPolygon& border, const std::string& out_path,
                        const std::string& title) {
  if (border.empty()) throw ParameterError("render_density_map: empty border");
  if (grid.width != classes.width || grid.height != classes.height) {
    throw ParameterError("render_density_map: grid and classes disagree on shape");
  }

  static const std::array<const char*, 8> kClassColors = {
      "#2b83ba", "#abdda4", "#ffffbf", "#fdae61",
      "#d7191c", "#a50f15", "#7a0177", "#49006a"};

  const PageTransform t = fit_viewport(bounding_box(border));
  std::ofstream out = open_output(out_path);
  emit_header(out);

  for (int row = 0; row < grid.height; ++row) {
    for (int col = 0; col < grid.width; ++col) {
      const int cls = classes.class_at(row, col);
      if (cls < 0) continue;
      const double wx = grid.origin.x + col * grid.cell_size_m;
      const double wy = grid.origin.y + row * grid.cell_size_m;
      const double x = t.px(wx);
      const double y = t.py(wy + grid.cell_size_m);
      const double size = grid.cell_size_m * t.scale;
      out << "<rect x=\"" << detail::fixed(x, 2) << "\" y=\"" << detail::fixed(y, 2)
          << "\" width=\"" << detail::fixed(size, 2) << "\" height=\""
          << detail::fixed(size, 2) << "\" fill=\""
          << kClassColors[static_cast<std::size_t>(cls) % kClassColors.size()] << "\"/>\n";
    }
  }

  emit_region(out, border, t, "none", "#333333", 1.0);
  emit_title(out, title);
  emit_legend(out, {{kClassColors[0], "< 5 services/km^2"},
                    {kClassColors[1], "5 - 25 services/km^2"},
                    {kClassColors[2], "25 - 45 services/km^2"},
                    {kClassColors[3], ">= 45 services/km^2"}});
  emit_scale_bar(out, t);
  out << "</svg>\n";
}

}  // namespace urbanreach
