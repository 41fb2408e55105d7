#include "urbanreach/coverage.hpp"

#include "urbanreach/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace urbanreach {

namespace {

// Percentages of a served/total split; an empty denominator counts as
// fully served (nothing to serve).
std::pair<double, double> split_percentages(double served_km2, double total_km2) {
  if (total_km2 * 1e6 < kSliverAreaM2) return {100.0, 0.0};
  const double served_pct = served_km2 / total_km2 * 100.0;
  return {served_pct, 100.0 - served_pct};
}

}  // namespace

std::string_view to_string(PatternLabel label) {
  switch (label) {
    case PatternLabel::Clustered: return "clustered";
    case PatternLabel::Random: return "random";
    case PatternLabel::Dispersed: return "dispersed";
  }
  return "?";
}

CoverageReport evaluate_coverage(const PointLayer& layer, const PlanningStandard& standard,
                                 const MultiPolygon& border, const MultiPolygon& built_up,
                                 const std::vector<District>& districts,
                                 int buffer_segments, std::vector<std::string>* warnings) {
  if (standard.kind == StandardKind::PerCapita || !standard.max_km.has_value()) {
    throw WrongKindError("evaluate_coverage: standard for " +
                         std::string(to_string(standard.service)) +
                         " carries no maximum distance; use parks_assessment");
  }
  const double max_km = *standard.max_km;
  if (!(max_km * 1000.0 > kSnapToleranceM)) {
    throw ParameterError("evaluate_coverage: maximum distance is below the snap tolerance");
  }

  // The built-up mass must sit inside the border (small digitization slack).
  const double built_up_km2 = polygon_area_km2(built_up);
  const double outside_km2 = polygon_area_km2(difference(built_up, border));
  if (outside_km2 * 1e6 > std::max(1e-6 * built_up_km2 * 1e6, 10.0 * kSliverAreaM2)) {
    throw ValidationError("evaluate_coverage: built-up area extends outside the border");
  }

  CoverageReport report;
  report.service = standard.service;
  report.standard_used = standard;

  if (layer.empty()) {
    if (warnings != nullptr) {
      warnings->push_back("service layer '" + layer.name +
                          "' is empty; reporting 0% served");
    }
    report.unserved_geometry = built_up;
  } else {
    const MultiPolygon reach = buffer(layer, max_km, buffer_segments);
    report.served_geometry = intersection(built_up, intersection(border, reach));
    report.unserved_geometry = difference(built_up, report.served_geometry);
  }

  report.served_km2 = polygon_area_km2(report.served_geometry);
  report.unserved_km2 = polygon_area_km2(report.unserved_geometry);
  const auto [served_pct, unserved_pct] = split_percentages(report.served_km2, built_up_km2);
  report.served_pct = served_pct;
  report.unserved_pct = unserved_pct;

  for (const District& district : districts) {
    DistrictCoverage row;
    row.name = district.name;
    row.served_km2 = polygon_area_km2(intersection(report.served_geometry, district.geometry));
    row.unserved_km2 =
        polygon_area_km2(intersection(report.unserved_geometry, district.geometry));
    // Percentages are of the district's built-up share, not its full area.
    const auto [d_served, d_unserved] =
        split_percentages(row.served_km2, row.served_km2 + row.unserved_km2);
    row.served_pct = d_served;
    row.unserved_pct = d_unserved;
    report.per_district.push_back(std::move(row));
  }

  return report;
}

ParksReport parks_assessment(const std::vector<District>& districts,
                             const std::vector<MultiPolygon>& parks_by_district,
                             double per_capita_m2) {
  if (districts.size() != parks_by_district.size()) {
    throw ParameterError("parks_assessment: one parks geometry required per district");
  }
  if (!(per_capita_m2 > 0.0)) {
    throw ParameterError("parks_assessment: per-capita share must be positive");
  }

  ParksReport report;
  report.per_capita_m2 = per_capita_m2;

  double total_share = 0.0;
  double total_parks = 0.0;
  for (std::size_t i = 0; i < districts.size(); ++i) {
    ParksDistrictRow row;
    row.name = districts[i].name;
    row.share_km2 = districts[i].population * per_capita_m2 / 1e6;
    row.parks_km2 = polygon_area_km2(parks_by_district[i]);
    if (row.share_km2 > 0.0) {
      row.pct_of_share = row.parks_km2 / row.share_km2 * 100.0;
      row.deficiency_km2 = std::max(0.0, row.share_km2 - row.parks_km2);
      row.deficiency_pct = std::max(0.0, 100.0 - row.pct_of_share);
    } else {
      // No population: the share is trivially satisfied.
      row.pct_of_share = 100.0;
      row.deficiency_km2 = 0.0;
      row.deficiency_pct = 0.0;
    }
    total_share += row.share_km2;
    total_parks += row.parks_km2;
    report.per_district.push_back(std::move(row));
  }

  report.totals.name = "TOTAL";
  report.totals.share_km2 = total_share;
  report.totals.parks_km2 = total_parks;
  if (total_share > 0.0) {
    report.totals.pct_of_share = total_parks / total_share * 100.0;
    report.totals.deficiency_km2 = std::max(0.0, total_share - total_parks);
    report.totals.deficiency_pct = std::max(0.0, 100.0 - report.totals.pct_of_share);
  } else {
    report.totals.pct_of_share = 100.0;
    report.totals.deficiency_km2 = 0.0;
    report.totals.deficiency_pct = 0.0;
  }
  return report;
}

double aggregate_coverage(const std::vector<double>& served_percentages) {
  if (served_percentages.empty()) {
    throw ParameterError("aggregate_coverage: no rows to aggregate");
  }
  double sum = 0.0;
  for (double pct : served_percentages) sum += pct;
  return sum / static_cast<double>(served_percentages.size());
}

NniResult nearest_neighbor_index(const PointLayer& layer, double study_area_km2) {
  const std::size_t n = layer.points.size();
  if (n < 2) throw ParameterError("nearest_neighbor_index: at least 2 points required");
  if (!(study_area_km2 > 0.0)) {
    throw ParameterError("nearest_neighbor_index: study area must be positive");
  }

  // Sweep over x-sorted points; the window shrinks to the best distance
  // found so far, so dense layers stay near O(n log n).
  std::vector<int> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (layer.points[a].x != layer.points[b].x) return layer.points[a].x < layer.points[b].x;
    return layer.points[a].y < layer.points[b].y;
  });

  double sum_nn = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = layer.points[order[i]];
    double best = std::numeric_limits<double>::max();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point& q = layer.points[order[j]];
      if (q.x - p.x >= best) break;
      best = std::min(best, distance(p, q));
    }
    for (std::size_t j = i; j-- > 0;) {
      const Point& q = layer.points[order[j]];
      if (p.x - q.x >= best) break;
      best = std::min(best, distance(p, q));
    }
    sum_nn += best;
  }

  NniResult result;
  result.observed_mean_m = sum_nn / static_cast<double>(n);
  const double area_m2 = study_area_km2 * 1e6;
  result.expected_mean_m = 0.5 * std::sqrt(area_m2 / static_cast<double>(n));
  result.r = result.observed_mean_m / result.expected_mean_m;
  if (std::abs(result.r - 1.0) <= 0.15) {
    result.label = PatternLabel::Random;
  } else if (result.r < 1.0) {
    result.label = PatternLabel::Clustered;
  } else {
    result.label = PatternLabel::Dispersed;
  }
  return result;
}

}  // namespace urbanreach
