#pragma once

#include <string>
#include <string_view>

#include "odsk/error.hpp"
#include "odsk/io/csv.hpp"
#include "odsk/io/text.hpp"
#include "odsk/scaling.hpp"

namespace odsk::io {

/// Many-valued table: the first column names the objects, the header row
/// names the remaining columns.
inline ManyValuedTable parse_table_csv(std::string_view text) {
  auto rows = parse_csv(text);
  if (rows.empty() || rows[0].empty()) throw parse_error("table: missing header row");
  ManyValuedTable t;
  t.columns.assign(rows[0].begin() + 1, rows[0].end());
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != rows[0].size())
      throw parse_error("table row " + std::to_string(r + 1) + ": expected " + std::to_string(rows[0].size()) +
                        " fields, got " + std::to_string(rows[r].size()));
    t.objects.push_back(rows[r][0]);
    t.cells.emplace_back(rows[r].begin() + 1, rows[r].end());
  }
  t.validate();
  return t;
}

inline ManyValuedTable read_table_csv(const std::string& path) { return parse_table_csv(read_file(path)); }

}  // namespace odsk::io
