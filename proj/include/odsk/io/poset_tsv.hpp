#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "odsk/io/text.hpp"
#include "odsk/linear_extensions.hpp"
#include "odsk/order.hpp"

namespace odsk::io {

/// Edge list: one "a<TAB>b" per line (a below b), or a lone name for an
/// isolated element. Lines starting with '#' and blank lines are ignored.
/// Elements are numbered in order of first appearance.
inline Relation parse_edge_list(std::string_view text) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  std::map<std::string, std::size_t, std::less<>> seen;
  auto note = [&](const std::string& n) {
    if (n.empty()) throw parse_error("edge list: empty element name");
    if (seen.emplace(n, names.size()).second) names.push_back(n);
  };
  std::size_t lineno = 0;
  for (const auto& line : split_lines(text)) {
    ++lineno;
    if (line.empty() || line.front() == '#' || trim(line).empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      note(line);
      continue;
    }
    if (line.find('\t', tab + 1) != std::string::npos)
      throw parse_error("edge list line " + std::to_string(lineno) + ": more than two fields");
    auto a = line.substr(0, tab), b = line.substr(tab + 1);
    note(a);
    note(b);
    edges.emplace_back(std::move(a), std::move(b));
  }
  Relation r(std::move(names));
  for (const auto& [a, b] : edges) r.add(r.index(a), r.index(b));
  return r;
}

/// Edge list with closure applied; cycles raise antisymmetry_violation.
inline Poset parse_poset(std::string_view text) { return close_relation(parse_edge_list(text)); }

inline Poset read_poset(const std::string& path) { return parse_poset(read_file(path)); }

/// Writes the covering pairs, plus lone lines for isolated elements.
inline std::string format_poset(const Poset& p) {
  std::string out;
  std::vector<bool> touched(p.size(), false);
  const auto covers = covering_relation(p);
  for (const auto& [a, b] : covers) touched[a] = touched[b] = true;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!touched[i]) out += p.name(i) + "\n";
  for (const auto& [a, b] : covers) out += p.name(a) + "\t" + p.name(b) + "\n";
  return out;
}

/// One linear extension per line, element names comma separated.
inline std::string format_realizer(const std::vector<std::string>& names,
                                   const std::vector<LinearExtension>& realizer) {
  std::string out;
  for (const auto& ext : realizer) {
    for (std::size_t k = 0; k < ext.order.size(); ++k) {
      if (k) out += ',';
      out += names[ext.order[k]];
    }
    out += '\n';
  }
  return out;
}

inline std::vector<LinearExtension> parse_realizer(std::string_view text, const Poset& p) {
  std::vector<LinearExtension> out;
  for (const auto& line : split_lines(text)) {
    if (line.empty()) continue;
    LinearExtension ext;
    std::size_t start = 0;
    while (start <= line.size()) {
      auto end = line.find(',', start);
      if (end == std::string::npos) end = line.size();
      ext.order.push_back(p.index(line.substr(start, end - start)));
      start = end + 1;
    }
    out.push_back(std::move(ext));
  }
  return out;
}

}  // namespace odsk::io
