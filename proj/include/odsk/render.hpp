#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>

#include "odsk/layout.hpp"

namespace odsk {

inline std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

struct SvgStyle {
  std::int64_t unit = 40;
  std::int64_t margin = 40;
  std::int64_t radius = 6;
};

/// SVG 1.1 with one <line> per edge, one <circle> and one <text> per node.
/// Drawing y grows upwards, screen y downwards.
inline std::string render_svg(const Drawing& d, const SvgStyle& style = {}) {
  std::int64_t min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  if (d.size() > 0) {
    min_x = max_x = d.positions[0].x;
    min_y = max_y = d.positions[0].y;
    for (const auto& p : d.positions) {
      min_x = std::min(min_x, p.x), max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y), max_y = std::max(max_y, p.y);
    }
  }
  const auto sx = [&](const Point& p) { return (p.x - min_x) * style.unit + style.margin; };
  const auto sy = [&](const Point& p) { return (max_y - p.y) * style.unit + style.margin; };
  const auto width = (max_x - min_x) * style.unit + 2 * style.margin;
  const auto height = (max_y - min_y) * style.unit + 2 * style.margin;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<g stroke=\"black\" stroke-width=\"1\">\n";
  for (const auto& [a, b] : d.edges) {
    const auto& p = d.positions[a];
    const auto& q = d.positions[b];
    out << "<line x1=\"" << sx(p) << "\" y1=\"" << sy(p) << "\" x2=\"" << sx(q) << "\" y2=\"" << sy(q) << "\"/>\n";
  }
  out << "</g>\n<g fill=\"white\" stroke=\"black\">\n";
  for (const auto& p : d.positions)
    out << "<circle cx=\"" << sx(p) << "\" cy=\"" << sy(p) << "\" r=\"" << style.radius << "\"/>\n";
  out << "</g>\n<g font-family=\"sans-serif\" font-size=\"10\">\n";
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto& p = d.positions[i];
    out << "<text x=\"" << sx(p) + style.radius + 2 << "\" y=\"" << sy(p) - style.radius << "\">"
        << xml_escape(i < d.labels.size() ? d.labels[i] : std::string()) << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

/// Graphviz digraph with pinned node positions (for neato -n).
inline std::string render_dot(const Drawing& d) {
  std::ostringstream out;
  out << "digraph order {\n  node [shape=circle];\n  edge [dir=none];\n";
  for (std::size_t i = 0; i < d.size(); ++i)
    out << "  n" << i << " [label=\"" << dot_escape(i < d.labels.size() ? d.labels[i] : std::string())
        << "\", pos=\"" << d.positions[i].x << ',' << d.positions[i].y << "!\"];\n";
  for (const auto& [a, b] : d.edges) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace odsk
