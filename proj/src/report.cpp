#include "kpartite/report.hpp"

#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace kpartite {

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  if (name == "table") return OutputFormat::Table;
  throw std::invalid_argument("unknown output format: " + name);
}

std::string format_spec(const PartitionSpec& spec) {
  std::string out;
  for (std::size_t i = 0; i < spec.parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(spec.parts[i]);
  }
  return out;
}

std::string format_locus(const EdgeLocus& locus) {
  return std::to_string(locus.part_a) + "," + std::to_string(locus.part_b);
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

constexpr const char* kCsvHeader =
    "spec,locus,energy_g,energy_ge,delta,predicted,observed,margin";

void write_csv_row(std::ostream& os, const EnergyComparison& r) {
  os << '"' << format_spec(r.spec) << "\",\"" << format_locus(r.locus) << "\","
     << format_number(r.energy_g) << ',' << format_number(r.energy_g_minus_e) << ','
     << format_number(r.delta) << ',' << to_string(r.predicted) << ','
     << to_string(r.observed) << ',' << format_number(r.margin) << '\n';
}

nlohmann::json to_json(const EnergyComparison& r) {
  return {{"spec", format_spec(r.spec)},
          {"locus", format_locus(r.locus)},
          {"energy_g", r.energy_g},
          {"energy_ge", r.energy_g_minus_e},
          {"delta", r.delta},
          {"predicted", to_string(r.predicted)},
          {"observed", to_string(r.observed)},
          {"margin", r.margin}};
}

void write_table_row(std::ostream& os, const EnergyComparison& r) {
  os << std::left << std::setw(16) << format_spec(r.spec) << std::setw(8)
     << format_locus(r.locus) << std::setw(18) << format_number(r.energy_g)
     << std::setw(18) << format_number(r.energy_g_minus_e) << std::setw(18)
     << format_number(r.delta) << std::setw(10) << to_string(r.predicted)
     << std::setw(14) << to_string(r.observed) << format_number(r.margin) << '\n';
}

void write_table_header(std::ostream& os) {
  os << std::left << std::setw(16) << "spec" << std::setw(8) << "locus" << std::setw(18)
     << "energy_g" << std::setw(18) << "energy_ge" << std::setw(18) << "delta"
     << std::setw(10) << "pred" << std::setw(14) << "observed" << "margin" << '\n';
}

}  // namespace

void write_rows(std::ostream& os, const std::vector<EnergyComparison>& rows,
                OutputFormat format) {
  switch (format) {
    case OutputFormat::Csv:
      os << kCsvHeader << '\n';
      for (const auto& r : rows) write_csv_row(os, r);
      break;
    case OutputFormat::Json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : rows) arr.push_back(to_json(r));
      os << arr.dump(2) << '\n';
      break;
    }
    case OutputFormat::Table:
      write_table_header(os);
      for (const auto& r : rows) write_table_row(os, r);
      break;
  }
}

void write_comparison(std::ostream& os, const EnergyComparison& row, OutputFormat format) {
  write_rows(os, {row}, format);
}

}  // namespace kpartite
