#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "odsk/context.hpp"
#include "odsk/io/text.hpp"

namespace odsk::io {

/// Burmeister format:
///   B / (empty) / |G| / |M| / (empty) / object names / attribute names /
///   one row per object of 'X' and '.'.
inline FormalContext parse_cxt(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t at = 0;
  auto next = [&](const char* what) -> const std::string& {
    if (at >= lines.size()) throw parse_error(std::string("cxt: unexpected end of file, expected ") + what);
    return lines[at++];
  };
  auto count = [&](const char* what) {
    const auto& l = next(what);
    try {
      std::size_t used = 0;
      const auto v = std::stoul(trim(l), &used);
      if (used != trim(l).size()) throw parse_error("");
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw parse_error(std::string("cxt: bad ") + what + ": '" + l + "'");
    }
  };
  if (trim(next("header")) != "B") throw parse_error("cxt: first line must be 'B'");
  if (!trim(next("blank line")).empty()) throw parse_error("cxt: line 2 must be empty");
  const auto n_objects = count("object count");
  const auto n_attributes = count("attribute count");
  if (!trim(next("blank line")).empty()) throw parse_error("cxt: line 5 must be empty");

  std::vector<std::string> objects, attributes;
  for (std::size_t g = 0; g < n_objects; ++g) objects.push_back(next("object name"));
  for (std::size_t m = 0; m < n_attributes; ++m) attributes.push_back(next("attribute name"));
  std::vector<Bitset> rows;
  for (std::size_t g = 0; g < n_objects; ++g) {
    const auto& row = next("incidence row");
    if (row.size() != n_attributes)
      throw parse_error("cxt: row " + std::to_string(g + 1) + " has length " + std::to_string(row.size()) +
                        ", expected " + std::to_string(n_attributes));
    Bitset b(n_attributes);
    for (std::size_t m = 0; m < n_attributes; ++m) {
      const char c = row[m];
      if (c == 'X' || c == 'x') b.set(m);
      else if (c != '.') throw parse_error(std::string("cxt: bad incidence character '") + c + "'");
    }
    rows.push_back(std::move(b));
  }
  for (; at < lines.size(); ++at)
    if (!trim(lines[at]).empty()) throw parse_error("cxt: trailing content after incidence rows");
  return FormalContext(std::move(objects), std::move(attributes), rows);
}

inline std::string format_cxt(const FormalContext& ctx) {
  std::string out = "B\n\n";
  out += std::to_string(ctx.object_count()) + "\n";
  out += std::to_string(ctx.attribute_count()) + "\n\n";
  for (const auto& g : ctx.objects()) out += g + "\n";
  for (const auto& m : ctx.attributes()) out += m + "\n";
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m) out += ctx.incident(g, m) ? 'X' : '.';
    out += '\n';
  }
  return out;
}

inline FormalContext read_cxt(const std::string& path) { return parse_cxt(read_file(path)); }

}  // namespace odsk::io
