#include "urbanreach/standards.hpp"

#include "urbanreach/errors.hpp"

#include <algorithm>
#include <vector>

namespace urbanreach {

std::string_view to_string(StandardKind kind) {
  switch (kind) {
    case StandardKind::DistanceDerived: return "distance-derived";
    case StandardKind::DistanceFixed: return "distance-fixed";
    case StandardKind::PerCapita: return "per-capita";
  }
  return "?";
}

StandardKind parse_standard_kind(std::string_view text) {
  if (text == "distance-derived") return StandardKind::DistanceDerived;
  if (text == "distance-fixed") return StandardKind::DistanceFixed;
  if (text == "per-capita") return StandardKind::PerCapita;
  throw ValidationError("unknown standard kind '" + std::string(text) + "'");
}

StandardKind standard_kind_for(ServiceCode code) {
  switch (code) {
    case ServiceCode::HOSP:
    case ServiceCode::CULT: return StandardKind::DistanceFixed;
    case ServiceCode::PARK: return StandardKind::PerCapita;
    default: return StandardKind::DistanceDerived;
  }
}

void StandardsTable::insert(const PlanningStandard& standard, std::string note) {
  entries[standard.service] = standard;
  provenance[standard.service] = std::move(note);
}

const PlanningStandard* StandardsTable::find(ServiceCode code) const {
  const auto it = entries.find(code);
  return it == entries.end() ? nullptr : &it->second;
}

PlanningStandard derive_standard(std::span<const CatchmentCell> cells, ServiceCode service,
                                 bool use_median) {
  if (cells.empty()) {
    throw ParameterError("derive_standard: no catchment cells supplied");
  }
  if (standard_kind_for(service) != StandardKind::DistanceDerived) {
    throw WrongKindError("derive_standard: service " + std::string(to_string(service)) +
                         " uses a fixed or per-capita standard");
  }

  double max_km = 0.0;
  if (use_median) {
    std::vector<double> distances;
    distances.reserve(cells.size());
    for (const CatchmentCell& cell : cells) distances.push_back(cell.coverage_distance_km);
    std::sort(distances.begin(), distances.end());
    const std::size_t n = distances.size();
    max_km = (n % 2 == 1) ? distances[n / 2]
                          : 0.5 * (distances[n / 2 - 1] + distances[n / 2]);
  } else {
    double sum = 0.0;
    for (const CatchmentCell& cell : cells) sum += cell.coverage_distance_km;
    max_km = sum / static_cast<double>(cells.size());
  }

  PlanningStandard standard;
  standard.service = service;
  standard.kind = StandardKind::DistanceDerived;
  standard.max_km = max_km;
  standard.min_km = max_km / 2.0;
  return standard;
}

StandardsTable fixed_standards() {
  StandardsTable table;

  PlanningStandard hospitals;
  hospitals.service = ServiceCode::HOSP;
  hospitals.kind = StandardKind::DistanceFixed;
  hospitals.min_km = kHospitalMinKm;
  hospitals.max_km = kHospitalMaxKm;
  table.insert(hospitals, "fixed");

  PlanningStandard cultural;
  cultural.service = ServiceCode::CULT;
  cultural.kind = StandardKind::DistanceFixed;
  cultural.min_km = kCulturalMinKm;
  cultural.max_km = kCulturalMaxKm;
  table.insert(cultural, "fixed");

  PlanningStandard parks;
  parks.service = ServiceCode::PARK;
  parks.kind = StandardKind::PerCapita;
  parks.per_capita_m2 = kParksPerCapitaM2;
  table.insert(parks, "fixed");

  return table;
}

}  // namespace urbanreach
