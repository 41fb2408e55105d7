#pragma once

#include "urbanreach/boolops.hpp"
#include "urbanreach/geom.hpp"
#include "urbanreach/layers.hpp"
#include "urbanreach/standards.hpp"

#include <string>
#include <vector>

namespace urbanreach {

struct DistrictCoverage {
  std::string name;
  double served_km2 = 0.0;
  double unserved_km2 = 0.0;
  double served_pct = 0.0;
  double unserved_pct = 0.0;
};

// Served/unserved split of the built-up area against one service standard.
struct CoverageReport {
  ServiceCode service = ServiceCode::KG;
  PlanningStandard standard_used;
  double served_km2 = 0.0;
  double unserved_km2 = 0.0;
  double served_pct = 0.0;
  double unserved_pct = 0.0;
  std::vector<DistrictCoverage> per_district;
  MultiPolygon served_geometry;
  MultiPolygon unserved_geometry;
};

struct ParksDistrictRow {
  std::string name;
  double share_km2 = 0.0;        // population * per-capita share
  double parks_km2 = 0.0;
  double pct_of_share = 0.0;
  double deficiency_km2 = 0.0;
  double deficiency_pct = 0.0;
};

// Per-capita deficiency model for parks and open areas.
struct ParksReport {
  double per_capita_m2 = 0.0;
  std::vector<ParksDistrictRow> per_district;
  ParksDistrictRow totals;
};

enum class PatternLabel { Clustered, Random, Dispersed };
std::string_view to_string(PatternLabel label);

struct NniResult {
  double r = 0.0;
  PatternLabel label = PatternLabel::Random;
  double observed_mean_m = 0.0;
  double expected_mean_m = 0.0;
};

// Buffer the service layer at the standard's maximum distance, clip to the
// border and built-up area, and split the built-up area into served and
// unserved regions, city-wide and per district.
CoverageReport evaluate_coverage(const PointLayer& layer, const PlanningStandard& standard,
                                 const MultiPolygon& border, const MultiPolygon& built_up,
                                 const std::vector<District>& districts,
                                 int buffer_segments = 64,
                                 std::vector<std::string>* warnings = nullptr);

// Parks per-capita assessment; `parks_by_district` aligns with `districts`.
ParksReport parks_assessment(const std::vector<District>& districts,
                             const std::vector<MultiPolygon>& parks_by_district,
                             double per_capita_m2);

// Unweighted mean of per-service served percentages.
double aggregate_coverage(const std::vector<double>& served_percentages);

// Clark-Evans nearest neighbor index: observed mean nearest-neighbor
// distance over the expected mean 0.5*sqrt(A/N) for a random pattern.
NniResult nearest_neighbor_index(const PointLayer& layer, double study_area_km2);

}  // namespace urbanreach
