#pragma once

#include "urbanreach/geom.hpp"
#include "urbanreach/layers.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace urbanreach {

// Regular analysis grid in services/km^2. Row-major storage, row 0 is the
// southernmost row; `origin` is the lower-left corner of cell (0,0).
struct DensityGrid {
  Point origin;
  double cell_size_m = 0.0;
  int width = 0;
  int height = 0;
  std::vector<double> values;
  std::vector<std::uint8_t> mask;  // 1 = cell center inside the border

  double value_at(int row, int col) const {
    return values[static_cast<std::size_t>(row) * width + col];
  }
  bool masked_in(int row, int col) const {
    return mask[static_cast<std::size_t>(row) * width + col] != 0;
  }
  Point cell_center(int row, int col) const {
    return {origin.x + (col + 0.5) * cell_size_m, origin.y + (row + 0.5) * cell_size_m};
  }
};

// Per-cell class indices; -1 marks masked-out cells.
struct ClassedGrid {
  int width = 0;
  int height = 0;
  std::vector<std::int8_t> classes;

  int class_at(int row, int col) const {
    return classes[static_cast<std::size_t>(row) * width + col];
  }
};

// Default class breaks in services/km^2: <5, 5-25, 25-45, >=45.
inline const std::vector<double> kDefaultDensityBreaks = {5.0, 25.0, 45.0};

// Quartic-kernel density surface evaluated at cell centers over the border's
// bounding box; cells whose center falls outside the border are masked and
// carry no value.
DensityGrid kde_grid(const PointLayer& layer, const MultiPolygon& border,
                     double cell_size_m = 50.0, double bandwidth_m = 500.0,
                     std::vector<std::string>* warnings = nullptr);

// Left-closed classification: value v gets the number of breaks <= v.
ClassedGrid classify_density(const DensityGrid& grid,
                             const std::vector<double>& breaks = kDefaultDensityBreaks);

}  // namespace urbanreach
