#pragma once

#include <array>
#include <string>
#include <string_view>

namespace urbanreach {

// Closed enumeration of the supported public services. Order mirrors the
// standards table (educational, health, religious, cultural, other).
enum class ServiceCode {
  KG,    // kindergartens
  PRI,   // primary schools
  PRE,   // preparatory schools
  SEC,   // secondary schools
  AMB,   // ambulance stations
  HU,    // health units
  HOSP,  // hospitals
  MOSQ,  // mosques
  CHUR,  // churches
  CULT,  // libraries and cultural centres
  PARK,  // parks and open areas
  POST,  // postal services
  FIRE,  // fire extinguishing points
};

inline constexpr std::array<ServiceCode, 13> kAllServiceCodes = {
    ServiceCode::KG,   ServiceCode::PRI,  ServiceCode::PRE,  ServiceCode::SEC,
    ServiceCode::AMB,  ServiceCode::HU,   ServiceCode::HOSP, ServiceCode::MOSQ,
    ServiceCode::CHUR, ServiceCode::CULT, ServiceCode::PARK, ServiceCode::POST,
    ServiceCode::FIRE};

std::string_view to_string(ServiceCode code);

// Human-readable service name used in report tables.
std::string_view display_name(ServiceCode code);

// Service group label (Educational services, Health services, ...).
std::string_view service_group(ServiceCode code);

// Throws ValidationError naming the closed code set on unknown input.
ServiceCode parse_service_code(std::string_view text);

// All valid codes joined for error messages.
std::string service_code_list();

}  // namespace urbanreach
