#ifndef KPARTITE_REPORT_HPP
#define KPARTITE_REPORT_HPP

#include <iosfwd>
#include <string>

#include "kpartite/verify.hpp"

namespace kpartite {

enum class OutputFormat { Csv, Json, Table };

OutputFormat parse_format(const std::string& name);  // throws on unknown name

std::string format_spec(const PartitionSpec& spec);  // "3,2,1"
std::string format_locus(const EdgeLocus& locus);    // "0,1"

/// Fixed 12-significant-digit formatting so identical runs produce
/// byte-identical files.
std::string format_number(double v);

void write_rows(std::ostream& os, const std::vector<EnergyComparison>& rows,
                OutputFormat format);

void write_comparison(std::ostream& os, const EnergyComparison& row, OutputFormat format);

}  // namespace kpartite

#endif  // KPARTITE_REPORT_HPP
