#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "odsk/error.hpp"
#include "odsk/io/csv.hpp"
#include "odsk/io/text.hpp"
#include "odsk/omspace.hpp"
#include "odsk/scaling.hpp"

namespace odsk::io {

/// Square distance table: header row of element names (first cell ignored),
/// then one row per element starting with its name, in the header's order.
inline FiniteMetric parse_distance_csv(std::string_view text) {
  const auto rows = parse_csv(text);
  if (rows.empty()) throw parse_error("distance table: empty input");
  const std::vector<std::string> names(rows[0].begin() + (rows[0].empty() ? 0 : 1), rows[0].end());
  if (rows.size() != names.size() + 1)
    throw parse_error("distance table: expected " + std::to_string(names.size()) + " data rows, got " +
                      std::to_string(rows.size() - 1));
  std::vector<std::vector<double>> d;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto& row = rows[i + 1];
    if (row.size() != names.size() + 1)
      throw parse_error("distance table row " + std::to_string(i + 2) + ": wrong number of fields");
    if (trim(row[0]) != trim(names[i]))
      throw parse_error("distance table row " + std::to_string(i + 2) + ": expected " + names[i] + ", got " + row[0]);
    std::vector<double> r;
    for (std::size_t j = 1; j < row.size(); ++j) {
      auto v = parse_number(trim(row[j]));
      if (!v) throw parse_error("distance table row " + std::to_string(i + 2) + ": not a number: " + row[j]);
      r.push_back(*v);
    }
    d.push_back(std::move(r));
  }
  std::vector<std::string> trimmed;
  for (const auto& n : names) trimmed.push_back(trim(n));
  return FiniteMetric(std::move(trimmed), std::move(d));
}

inline FiniteMetric read_distance_csv(const std::string& path) { return parse_distance_csv(read_file(path)); }

}  // namespace odsk::io
