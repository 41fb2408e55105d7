#include "urbanreach/density.hpp"

#include "urbanreach/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace urbanreach {

DensityGrid kde_grid(const PointLayer& layer, const MultiPolygon& border,
                     double cell_size_m, double bandwidth_m,
                     std::vector<std::string>* warnings) {
  if (!(cell_size_m > 0.0)) throw ParameterError("kde_grid: cell size must be positive");
  if (!(bandwidth_m > 0.0)) throw ParameterError("kde_grid: bandwidth must be positive");
  if (bandwidth_m < cell_size_m) {
    throw ParameterError("kde_grid: bandwidth must be at least the cell size");
  }
  if (border.empty()) throw ParameterError("kde_grid: empty border");

  const Box box = bounding_box(border);
  DensityGrid grid;
  grid.origin = {box.min_x, box.min_y};
  grid.cell_size_m = cell_size_m;
  grid.width = std::max(1, static_cast<int>(std::ceil(box.width() / cell_size_m)));
  grid.height = std::max(1, static_cast<int>(std::ceil(box.height() / cell_size_m)));
  grid.values.assign(static_cast<std::size_t>(grid.width) * grid.height, 0.0);
  grid.mask.assign(grid.values.size(), 0);

  for (int row = 0; row < grid.height; ++row) {
    for (int col = 0; col < grid.width; ++col) {
      if (point_in_polygon(grid.cell_center(row, col), border)) {
        grid.mask[static_cast<std::size_t>(row) * grid.width + col] = 1;
      }
    }
  }

  if (layer.empty()) {
    if (warnings != nullptr) {
      warnings->push_back("service layer '" + layer.name + "' is empty; density grid is zero");
    }
    return grid;
  }

  // Quartic (biweight) kernel: 3/(pi h^2) (1 - d^2/h^2)^2 for d < h.
  const double h2 = bandwidth_m * bandwidth_m;
  const double peak = 3.0 / (std::numbers::pi * h2);
  for (const Point& p : layer.points) {
    const int col_lo = std::max(
        0, static_cast<int>(std::floor((p.x - bandwidth_m - grid.origin.x) / cell_size_m)));
    const int col_hi = std::min(
        grid.width - 1,
        static_cast<int>(std::ceil((p.x + bandwidth_m - grid.origin.x) / cell_size_m)));
    const int row_lo = std::max(
        0, static_cast<int>(std::floor((p.y - bandwidth_m - grid.origin.y) / cell_size_m)));
    const int row_hi = std::min(
        grid.height - 1,
        static_cast<int>(std::ceil((p.y + bandwidth_m - grid.origin.y) / cell_size_m)));
    for (int row = row_lo; row <= row_hi; ++row) {
      for (int col = col_lo; col <= col_hi; ++col) {
        const std::size_t idx = static_cast<std::size_t>(row) * grid.width + col;
        if (grid.mask[idx] == 0) continue;
        const Point center = grid.cell_center(row, col);
        const double d2 = (center.x - p.x) * (center.x - p.x) +
                          (center.y - p.y) * (center.y - p.y);
        if (d2 >= h2) continue;
        const double w = 1.0 - d2 / h2;
        grid.values[idx] += peak * w * w * 1e6;  // per m^2 -> per km^2
      }
    }
  }
  return grid;
}

ClassedGrid classify_density(const DensityGrid& grid, const std::vector<double>& breaks) {
  for (std::size_t i = 1; i < breaks.size(); ++i) {
    if (!(breaks[i - 1] < breaks[i])) {
      throw ParameterError("classify_density: breaks must be strictly increasing");
    }
  }
  ClassedGrid out;
  out.width = grid.width;
  out.height = grid.height;
  out.classes.assign(grid.values.size(), -1);
  for (std::size_t i = 0; i < grid.values.size(); ++i) {
    if (grid.mask[i] == 0) continue;
    // Left-closed classes: the index is the number of breaks <= value.
    const auto it = std::upper_bound(breaks.begin(), breaks.end(), grid.values[i]);
    out.classes[i] = static_cast<std::int8_t>(std::distance(breaks.begin(), it));
  }
  return out;
}

}  // namespace urbanreach
