#include "urbanreach/errors.hpp"
#include "urbanreach/io.hpp"

#include "format.hpp"

#include <json.hpp>

#include <fstream>

namespace urbanreach {

namespace {

using nlohmann::json;

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  return out;
}

void write_district_rows(std::ostream& out, const CoverageReport& report) {
  for (const DistrictCoverage& row : report.per_district) {
    out << to_string(report.service) << ',' << row.name << ','
        << detail::fixed(row.served_km2, 2) << ',' << detail::fixed(row.served_pct, 2) << ','
        << detail::fixed(row.unserved_km2, 2) << ',' << detail::fixed(row.unserved_pct, 2)
        << '\n';
  }
}

json standard_to_json(const PlanningStandard& standard, const std::string& provenance) {
  json entry;
  entry["service"] = std::string(to_string(standard.service));
  entry["kind"] = std::string(to_string(standard.kind));
  if (standard.min_km.has_value()) entry["min_km"] = *standard.min_km;
  if (standard.max_km.has_value()) entry["max_km"] = *standard.max_km;
  if (standard.per_capita_m2.has_value()) entry["per_capita_m2"] = *standard.per_capita_m2;
  if (!provenance.empty()) entry["provenance"] = provenance;
  return entry;
}

}  // namespace

void write_standards_csv(const StandardsTable& table, const std::string& path) {
  std::ofstream out = open_output(path);
  out << "group,service,min_km,max_km\n";
  for (ServiceCode code : kAllServiceCodes) {
    const PlanningStandard* standard = table.find(code);
    if (standard == nullptr) continue;
    out << service_group(code) << ',' << display_name(code) << ',';
    if (standard->min_km.has_value()) out << detail::fixed(*standard->min_km, 3);
    out << ',';
    if (standard->max_km.has_value()) out << detail::fixed(*standard->max_km, 3);
    out << '\n';
  }
}

void write_standards_json(const StandardsTable& table, const std::string& path) {
  // Hand-assembled text so numbers keep their exact shortest form.
  std::ofstream out = open_output(path);
  out << "{\"standards\":[";
  bool first = true;
  for (ServiceCode code : kAllServiceCodes) {
    const PlanningStandard* standard = table.find(code);
    if (standard == nullptr) continue;
    if (!first) out << ',';
    first = false;
    out << "\n{\"service\":\"" << to_string(code) << "\",\"kind\":\""
        << to_string(standard->kind) << '"';
    if (standard->min_km.has_value()) {
      out << ",\"min_km\":" << detail::shortest(*standard->min_km);
    }
    if (standard->max_km.has_value()) {
      out << ",\"max_km\":" << detail::shortest(*standard->max_km);
    }
    if (standard->per_capita_m2.has_value()) {
      out << ",\"per_capita_m2\":" << detail::shortest(*standard->per_capita_m2);
    }
    const auto note = table.provenance.find(code);
    if (note != table.provenance.end() && !note->second.empty()) {
      out << ",\"provenance\":\"" << note->second << '"';
    }
    out << '}';
  }
  out << "\n]}\n";
}

StandardsTable read_standards_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": malformed JSON at byte " + std::to_string(e.byte) + ": " +
                         e.what(),
                     e.byte);
  }
  if (!doc.is_object() || !doc.contains("standards") || !doc["standards"].is_array()) {
    throw ValidationError(path + ": expected an object with a 'standards' array");
  }
  StandardsTable table;
  for (const json& entry : doc["standards"]) {
    if (!entry.is_object() || !entry.contains("service") || !entry.contains("kind")) {
      throw ValidationError(path + ": standard entry missing 'service' or 'kind'");
    }
    PlanningStandard standard;
    standard.service = parse_service_code(entry["service"].get<std::string>());
    standard.kind = parse_standard_kind(entry["kind"].get<std::string>());
    if (entry.contains("min_km")) standard.min_km = entry["min_km"].get<double>();
    if (entry.contains("max_km")) standard.max_km = entry["max_km"].get<double>();
    if (entry.contains("per_capita_m2")) {
      standard.per_capita_m2 = entry["per_capita_m2"].get<double>();
    }
    if (standard.kind != StandardKind::PerCapita) {
      if (!standard.max_km.has_value() || !(*standard.max_km > 0.0)) {
        throw ValidationError(path + ": distance standard for " +
                              std::string(to_string(standard.service)) +
                              " needs a positive max_km");
      }
    } else if (!standard.per_capita_m2.has_value() || !(*standard.per_capita_m2 > 0.0)) {
      throw ValidationError(path + ": per-capita standard for " +
                            std::string(to_string(standard.service)) +
                            " needs a positive per_capita_m2");
    }
    table.insert(standard, entry.value("provenance", std::string{}));
  }
  return table;
}

void write_coverage_csv(const CoverageReport& report, const std::string& path) {
  std::ofstream out = open_output(path);
  out << "service,scope,served_km2,served_pct,unserved_km2,unserved_pct\n";
  out << to_string(report.service) << ",city," << detail::fixed(report.served_km2, 2) << ','
      << detail::fixed(report.served_pct, 2) << ',' << detail::fixed(report.unserved_km2, 2)
      << ',' << detail::fixed(report.unserved_pct, 2) << '\n';
  write_district_rows(out, report);
}

void write_coverage_json(const CoverageReport& report, const NniResult* nni,
                         const std::string& path) {
  std::ofstream out = open_output(path);
  out << "{\"service\":\"" << to_string(report.service) << "\",";
  out << "\"standard\":{\"kind\":\"" << to_string(report.standard_used.kind) << '"';
  if (report.standard_used.min_km.has_value()) {
    out << ",\"min_km\":" << detail::shortest(*report.standard_used.min_km);
  }
  if (report.standard_used.max_km.has_value()) {
    out << ",\"max_km\":" << detail::shortest(*report.standard_used.max_km);
  }
  out << "},";
  out << "\"served_km2\":" << detail::shortest(report.served_km2) << ','
      << "\"served_pct\":" << detail::shortest(report.served_pct) << ','
      << "\"unserved_km2\":" << detail::shortest(report.unserved_km2) << ','
      << "\"unserved_pct\":" << detail::shortest(report.unserved_pct) << ','
      << "\"per_district\":[";
  for (std::size_t i = 0; i < report.per_district.size(); ++i) {
    const DistrictCoverage& row = report.per_district[i];
    if (i > 0) out << ',';
    out << "\n{\"name\":\"" << row.name << "\",\"served_km2\":"
        << detail::shortest(row.served_km2) << ",\"served_pct\":"
        << detail::shortest(row.served_pct) << ",\"unserved_km2\":"
        << detail::shortest(row.unserved_km2) << ",\"unserved_pct\":"
        << detail::shortest(row.unserved_pct) << '}';
  }
  out << "\n]";
  if (nni != nullptr) {
    out << ",\"nearest_neighbor\":{\"r\":" << detail::shortest(nni->r) << ",\"pattern\":\""
        << to_string(nni->label) << "\",\"observed_mean_m\":"
        << detail::shortest(nni->observed_mean_m) << ",\"expected_mean_m\":"
        << detail::shortest(nni->expected_mean_m) << '}';
  }
  out << "}\n";
}

void write_aggregate_csv(std::span<const AggregateRow> rows, double average_served_pct,
                         const std::string& path) {
  std::ofstream out = open_output(path);
  out << "service,served_km2,served_pct,unserved_km2,unserved_pct\n";
  for (const AggregateRow& row : rows) {
    out << display_name(row.service) << ',' << detail::fixed(row.served_km2, 2) << ','
        << detail::fixed(row.served_pct, 2) << ',' << detail::fixed(row.unserved_km2, 2)
        << ',' << detail::fixed(row.unserved_pct, 2) << '\n';
  }
  out << "Average,," << detail::fixed(average_served_pct, 2) << ",,"
      << detail::fixed(100.0 - average_served_pct, 2) << '\n';
}

void write_aggregate_json(std::span<const AggregateRow> rows, double average_served_pct,
                          const std::string& path) {
  std::ofstream out = open_output(path);
  out << "{\"rows\":[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const AggregateRow& row = rows[i];
    if (i > 0) out << ',';
    out << "\n{\"service\":\"" << to_string(row.service) << "\",\"name\":\""
        << display_name(row.service) << "\",\"served_km2\":"
        << detail::shortest(row.served_km2) << ",\"served_pct\":"
        << detail::shortest(row.served_pct) << ",\"unserved_km2\":"
        << detail::shortest(row.unserved_km2) << ",\"unserved_pct\":"
        << detail::shortest(row.unserved_pct) << '}';
  }
  out << "\n],\"average_served_pct\":" << detail::shortest(average_served_pct)
      << ",\"average_unserved_pct\":" << detail::shortest(100.0 - average_served_pct)
      << "}\n";
}

void write_parks_csv(const ParksReport& report, const std::string& path) {
  std::ofstream out = open_output(path);
  out << "district,share_km2,parks_km2,pct_of_share,deficiency_km2,deficiency_pct\n";
  auto row_out = [&out](const ParksDistrictRow& row) {
    out << row.name << ',' << detail::fixed(row.share_km2, 6) << ','
        << detail::fixed(row.parks_km2, 6) << ',' << detail::fixed(row.pct_of_share, 2)
        << ',' << detail::fixed(row.deficiency_km2, 6) << ','
        << detail::fixed(row.deficiency_pct, 2) << '\n';
  };
  for (const ParksDistrictRow& row : report.per_district) row_out(row);
  row_out(report.totals);
}

void write_parks_json(const ParksReport& report, const std::string& path) {
  std::ofstream out = open_output(path);
  auto row_json = [](const ParksDistrictRow& row) {
    std::string s = "{\"name\":\"" + row.name + "\"";
    s += ",\"share_km2\":" + detail::shortest(row.share_km2);
    s += ",\"parks_km2\":" + detail::shortest(row.parks_km2);
    s += ",\"pct_of_share\":" + detail::shortest(row.pct_of_share);
    s += ",\"deficiency_km2\":" + detail::shortest(row.deficiency_km2);
    s += ",\"deficiency_pct\":" + detail::shortest(row.deficiency_pct);
    s += "}";
    return s;
  };
  out << "{\"per_capita_m2\":" << detail::shortest(report.per_capita_m2)
      << ",\"per_district\":[";
  for (std::size_t i = 0; i < report.per_district.size(); ++i) {
    if (i > 0) out << ',';
    out << "\n" << row_json(report.per_district[i]);
  }
  out << "\n],\"totals\":" << row_json(report.totals) << "}\n";
}

void write_ascii_grid(const DensityGrid& grid, const std::string& path) {
  std::ofstream out = open_output(path);
  out << "ncols " << grid.width << '\n';
  out << "nrows " << grid.height << '\n';
  out << "xllcorner " << detail::fixed(grid.origin.x, 3) << '\n';
  out << "yllcorner " << detail::fixed(grid.origin.y, 3) << '\n';
  out << "cellsize " << detail::fixed(grid.cell_size_m, 3) << '\n';
  out << "NODATA_value -9999\n";
  for (int row = grid.height - 1; row >= 0; --row) {
    for (int col = 0; col < grid.width; ++col) {
      if (col > 0) out << ' ';
      if (grid.masked_in(row, col)) {
        out << detail::fixed(grid.value_at(row, col), 6);
      } else {
        out << "-9999";
      }
    }
    out << '\n';
  }
}

}  // namespace urbanreach
