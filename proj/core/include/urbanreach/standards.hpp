#pragma once

#include "urbanreach/service_code.hpp"
#include "urbanreach/voronoi.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>

namespace urbanreach {

enum class StandardKind { DistanceDerived, DistanceFixed, PerCapita };

std::string_view to_string(StandardKind kind);
StandardKind parse_standard_kind(std::string_view text);

// Which kind of standard each service uses. HOSP and CULT carry fixed
// distances, PARK is per-capita, everything else is derived from catchments.
StandardKind standard_kind_for(ServiceCode code);

// Per-service coverage criterion: a min/max distance band or a per-capita
// area share.
struct PlanningStandard {
  ServiceCode service = ServiceCode::KG;
  StandardKind kind = StandardKind::DistanceDerived;
  std::optional<double> min_km;
  std::optional<double> max_km;
  std::optional<double> per_capita_m2;
};

struct StandardsTable {
  std::map<ServiceCode, PlanningStandard> entries;
  std::map<ServiceCode, std::string> provenance;

  void insert(const PlanningStandard& standard, std::string note);
  const PlanningStandard* find(ServiceCode code) const;
};

// Derived standard: the maximum service limit is the mean catchment
// coverage distance, and the minimum limit is half of it. `use_median`
// swaps the mean for a median (robustness experiments; off by default).
PlanningStandard derive_standard(std::span<const CatchmentCell> cells, ServiceCode service,
                                 bool use_median = false);

// Fixed entries not derived from catchments: hospitals 40-50 km, cultural
// centres 3-5 km, parks 11 m^2/person.
StandardsTable fixed_standards();

inline constexpr double kHospitalMinKm = 40.0;
inline constexpr double kHospitalMaxKm = 50.0;
inline constexpr double kCulturalMinKm = 3.0;
inline constexpr double kCulturalMaxKm = 5.0;
inline constexpr double kParksPerCapitaM2 = 11.0;

}  // namespace urbanreach
