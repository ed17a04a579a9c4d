#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "odsk/error.hpp"

namespace odsk::io {

/// RFC 4180 reader: comma separated, '"' quoting with "" escapes, quoted
/// cells may span lines. Accepts both "\n" and "\r\n" record ends. Blank
/// records are skipped.
inline std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string cell;
  bool quoted = false;
  bool cell_started = false;
  auto end_record = [&] {
    if (cell_started || !record.empty()) {
      record.push_back(std::move(cell));
      records.push_back(std::move(record));
    }
    record.clear();
    cell.clear();
    cell_started = false;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          cell += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cell += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!cell.empty()) throw parse_error("quote inside unquoted CSV cell");
        quoted = true;
        cell_started = true;
        break;
      case ',':
        record.push_back(std::move(cell));
        cell.clear();
        cell_started = true;
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') break;
        cell += c;
        break;
      case '\n':
        end_record();
        break;
      default:
        cell += c;
        cell_started = true;
    }
  }
  if (quoted) throw parse_error("unterminated quoted CSV cell");
  end_record();
  return records;
}

inline std::string csv_escape(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace odsk::io
