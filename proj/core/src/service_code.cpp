#include "urbanreach/service_code.hpp"

#include "urbanreach/errors.hpp"

namespace urbanreach {

std::string_view to_string(ServiceCode code) {
  switch (code) {
    case ServiceCode::KG: return "KG";
    case ServiceCode::PRI: return "PRI";
    case ServiceCode::PRE: return "PRE";
    case ServiceCode::SEC: return "SEC";
    case ServiceCode::AMB: return "AMB";
    case ServiceCode::HU: return "HU";
    case ServiceCode::HOSP: return "HOSP";
    case ServiceCode::MOSQ: return "MOSQ";
    case ServiceCode::CHUR: return "CHUR";
    case ServiceCode::CULT: return "CULT";
    case ServiceCode::PARK: return "PARK";
    case ServiceCode::POST: return "POST";
    case ServiceCode::FIRE: return "FIRE";
  }
  return "?";
}

std::string_view display_name(ServiceCode code) {
  switch (code) {
    case ServiceCode::KG: return "Kindergarten";
    case ServiceCode::PRI: return "Primary schools";
    case ServiceCode::PRE: return "Preparatory schools";
    case ServiceCode::SEC: return "Secondary schools";
    case ServiceCode::AMB: return "Ambulance";
    case ServiceCode::HU: return "Health units";
    case ServiceCode::HOSP: return "Hospitals";
    case ServiceCode::MOSQ: return "Mosques";
    case ServiceCode::CHUR: return "Churches";
    case ServiceCode::CULT: return "Libraries and cultural centres";
    case ServiceCode::PARK: return "Parks and open areas";
    case ServiceCode::POST: return "Postal services";
    case ServiceCode::FIRE: return "Fire extinguishing points";
  }
  return "?";
}

std::string_view service_group(ServiceCode code) {
  switch (code) {
    case ServiceCode::KG:
    case ServiceCode::PRI:
    case ServiceCode::PRE:
    case ServiceCode::SEC: return "Educational services";
    case ServiceCode::AMB:
    case ServiceCode::HU:
    case ServiceCode::HOSP: return "Health services";
    case ServiceCode::MOSQ:
    case ServiceCode::CHUR: return "Religious services";
    case ServiceCode::CULT:
    case ServiceCode::PARK: return "Cultural and recreational services";
    case ServiceCode::POST:
    case ServiceCode::FIRE: return "Other services";
  }
  return "?";
}

ServiceCode parse_service_code(std::string_view text) {
  for (ServiceCode code : kAllServiceCodes) {
    if (text == to_string(code)) return code;
  }
  throw ValidationError("unknown service code '" + std::string(text) +
                        "'; valid codes: " + service_code_list());
}

std::string service_code_list() {
  std::string out;
  for (ServiceCode code : kAllServiceCodes) {
    if (!out.empty()) out += ", ";
    out += to_string(code);
  }
  return out;
}

}  // namespace urbanreach
