#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "odsk/context.hpp"
#include "odsk/error.hpp"
#include "odsk/order.hpp"

namespace odsk {

/// Rows = objects, named columns of string cells.
struct ManyValuedTable {
  std::vector<std::string> objects;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> cells;  // [object][column]

  std::optional<std::size_t> column_index(std::string_view name) const {
    auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) return std::nullopt;
    return static_cast<std::size_t>(it - columns.begin());
  }

  void validate() const {
    if (cells.size() != objects.size()) throw validation_error("table: row count does not match object count");
    for (const auto& row : cells)
      if (row.size() != columns.size()) throw validation_error("table: ragged row");
    (void)Relation(objects);  // unique object names
    for (std::size_t i = 0; i < columns.size(); ++i)
      for (std::size_t j = i + 1; j < columns.size(); ++j)
        if (columns[i] == columns[j]) throw validation_error("table: duplicate column " + columns[i]);
  }
};

enum class ScaleKind { nominal, ordinal, interordinal, contranominal, dichotomic, ignore };
enum class Direction { ascending, descending };

struct ScaleSpec {
  ScaleKind kind = ScaleKind::nominal;
  Direction direction = Direction::ascending;
  std::optional<std::vector<std::string>> values;
};

/// Column name -> scale.
using ScalingConfig = std::map<std::string, ScaleSpec, std::less<>>;

inline ScaleKind parse_scale_kind(std::string_view s) {
  if (s == "nominal") return ScaleKind::nominal;
  if (s == "ordinal" || s == "linear") return ScaleKind::ordinal;
  if (s == "interordinal" || s == "interval") return ScaleKind::interordinal;
  if (s == "contranominal" || s == "contra-nominal") return ScaleKind::contranominal;
  if (s == "dichotomic") return ScaleKind::dichotomic;
  if (s == "ignore") return ScaleKind::ignore;
  throw validation_error("unsupported scale kind: " + std::string(s));
}

inline std::optional<double> parse_number(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

/// nominal: identity; contranominal: complement of identity; ordinal: object
/// i has attribute j iff i >= j; interordinal: n "<= j" attributes followed
/// by n ">= j" attributes. dichotomic is nominal on exactly two values.
inline FormalContext standard_scale(ScaleKind kind, std::size_t n) {
  if (n == 0) throw validation_error("standard scale needs n >= 1");
  if (kind == ScaleKind::dichotomic && n != 2) throw validation_error("dichotomic scale has exactly 2 values");
  if (kind == ScaleKind::ignore) throw validation_error("unsupported scale kind: ignore");
  std::vector<std::string> objects;
  for (std::size_t i = 0; i < n; ++i) objects.push_back(std::to_string(i));
  std::vector<std::string> attributes;
  auto named = [&](const char* op) {
    for (std::size_t j = 0; j < n; ++j) attributes.push_back(op + std::to_string(j));
  };
  switch (kind) {
    case ScaleKind::nominal:
    case ScaleKind::dichotomic: named("="); break;
    case ScaleKind::contranominal: named("!="); break;
    case ScaleKind::ordinal: named(">="); break;
    case ScaleKind::interordinal:
      named("<=");
      named(">=");
      break;
    case ScaleKind::ignore: break;
  }
  FormalContext ctx(std::move(objects), std::move(attributes));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      switch (kind) {
        case ScaleKind::nominal:
        case ScaleKind::dichotomic: ctx.set(i, j, i == j); break;
        case ScaleKind::contranominal: ctx.set(i, j, i != j); break;
        case ScaleKind::ordinal: ctx.set(i, j, i >= j); break;
        case ScaleKind::interordinal:
          ctx.set(i, j, i <= j);
          ctx.set(i, n + j, i >= j);
          break;
        case ScaleKind::ignore: break;
      }
    }
  return ctx;
}

/// Per-column value ranking. rank[g] indexes `labels`, which lists the
/// distinct observed values in ascending order.
struct RankedColumn {
  std::vector<std::size_t> rank;
  std::vector<std::string> labels;
};

inline RankedColumn rank_column(const ManyValuedTable& table, std::size_t col, const ScaleSpec& spec) {
  const auto n = table.objects.size();
  std::vector<std::optional<double>> numbers(n);
  bool numeric = true;
  for (std::size_t g = 0; g < n; ++g) {
    numbers[g] = parse_number(table.cells[g][col]);
    numeric = numeric && numbers[g].has_value();
  }
  const auto& name = table.columns[col];

  // position of each cell in the value order (not yet compacted)
  std::vector<double> key(n);
  std::map<double, std::string> label_of;
  if (spec.values) {
    const auto& vals = *spec.values;
    for (std::size_t g = 0; g < n; ++g) {
      const auto& cell = table.cells[g][col];
      std::optional<std::size_t> pos;
      for (std::size_t k = 0; k < vals.size() && !pos; ++k) {
        if (vals[k] == cell) pos = k;
        else if (numbers[g] && parse_number(vals[k]) == numbers[g]) pos = k;
      }
      if (!pos) throw validation_error("column " + name + ": unknown value '" + cell + "'");
      key[g] = static_cast<double>(*pos);
      label_of.emplace(key[g], vals[*pos]);
    }
  } else if (numeric) {
    for (std::size_t g = 0; g < n; ++g) {
      key[g] = *numbers[g];
      label_of.emplace(key[g], table.cells[g][col]);
    }
  } else {
    if (spec.kind == ScaleKind::ordinal || spec.kind == ScaleKind::interordinal)
      throw validation_error("column " + name + ": non-numeric ordinal column needs an explicit value order");
    std::vector<std::string> sorted;
    for (std::size_t g = 0; g < n; ++g) sorted.push_back(table.cells[g][col]);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t g = 0; g < n; ++g) {
      key[g] = static_cast<double>(std::lower_bound(sorted.begin(), sorted.end(), table.cells[g][col]) - sorted.begin());
      label_of.emplace(key[g], table.cells[g][col]);
    }
  }
  RankedColumn out;
  std::map<double, std::size_t> compact;
  for (const auto& [k, label] : label_of) {
    compact.emplace(k, out.labels.size());
    out.labels.push_back(label);
  }
  for (std::size_t g = 0; g < n; ++g) out.rank.push_back(compact.at(key[g]));
  return out;
}

namespace detail {

inline const ScaleSpec& spec_for(const ScalingConfig& config, const std::string& column) {
  auto it = config.find(column);
  if (it == config.end()) throw validation_error("no scale given for column " + column);
  return it->second;
}

}  // namespace detail

/// Derived context. Attribute names are "column:op:value"; attribute order
/// is column order, then value order. Ordinal scales omit the always-true
/// threshold (the weakest value), as does each half of an interordinal one.
inline FormalContext apply_scaling(const ManyValuedTable& table, const ScalingConfig& config) {
  table.validate();
  for (const auto& [column, spec] : config)
    if (!table.column_index(column)) throw validation_error("scale given for unknown column " + column);

  struct Attr {
    std::string name;
    std::size_t column;
    std::vector<bool> has;
  };
  std::vector<Attr> attrs;
  const auto n = table.objects.size();
  for (std::size_t col = 0; col < table.columns.size(); ++col) {
    const auto& name = table.columns[col];
    const auto& spec = detail::spec_for(config, name);
    if (spec.kind == ScaleKind::ignore) continue;
    const auto ranked = rank_column(table, col, spec);
    const auto k = ranked.labels.size();
    auto add = [&](const std::string& op, std::size_t v, auto&& pred) {
      Attr a{name + ":" + op + ":" + ranked.labels[v], col, std::vector<bool>(n)};
      for (std::size_t g = 0; g < n; ++g) a.has[g] = pred(ranked.rank[g]);
      attrs.push_back(std::move(a));
    };
    switch (spec.kind) {
      case ScaleKind::dichotomic:
        if (k != 2) throw validation_error("column " + name + ": dichotomic scale needs exactly 2 values");
        [[fallthrough]];
      case ScaleKind::nominal:
        for (std::size_t v = 0; v < k; ++v) add("=", v, [v](std::size_t r) { return r == v; });
        break;
      case ScaleKind::contranominal:
        for (std::size_t v = 0; v < k; ++v) add("!=", v, [v](std::size_t r) { return r != v; });
        break;
      case ScaleKind::ordinal:
        if (spec.direction == Direction::ascending) {
          for (std::size_t v = 1; v < k; ++v) add(">=", v, [v](std::size_t r) { return r >= v; });
        } else {
          for (std::size_t v = k - 1; v-- > 0;) add("<=", v, [v](std::size_t r) { return r <= v; });
        }
        break;
      case ScaleKind::interordinal:
        for (std::size_t v = 0; v + 1 < k; ++v) add("<=", v, [v](std::size_t r) { return r <= v; });
        for (std::size_t v = 1; v < k; ++v) add(">=", v, [v](std::size_t r) { return r >= v; });
        break;
      case ScaleKind::ignore: break;
    }
  }
  std::vector<std::string> names;
  for (const auto& a : attrs) names.push_back(a.name);
  FormalContext ctx(table.objects, std::move(names));
  for (std::size_t m = 0; m < attrs.size(); ++m)
    for (std::size_t g = 0; g < n; ++g)
      if (attrs[m].has[g]) ctx.set(g, m);
  return ctx;
}

/// One linear quasi-order per ordinal column ("better" is greater).
inline OrdinalStructure ordinal_structure(const ManyValuedTable& table, const ScalingConfig& config) {
  table.validate();
  std::vector<NamedOrder> orders;
  for (std::size_t col = 0; col < table.columns.size(); ++col) {
    const auto& spec = detail::spec_for(config, table.columns[col]);
    if (spec.kind == ScaleKind::ignore) continue;
    if (spec.kind != ScaleKind::ordinal)
      throw validation_error("column " + table.columns[col] + ": only ordinal scales define an order");
    const auto ranked = rank_column(table, col, spec);
    std::vector<double> scores(ranked.rank.begin(), ranked.rank.end());
    orders.push_back({table.columns[col],
                      QuasiOrder::from_scores(table.objects, scores, spec.direction == Direction::ascending)});
  }
  return OrdinalStructure(table.objects, std::move(orders));
}

/// {"column": {"kind": "...", "direction": "ascending|descending", "values": [...]}}
inline ScalingConfig parse_scaling_config(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("scaling config: ") + e.what());
  }
  if (!doc.is_object()) throw parse_error("scaling config must be a JSON object");
  ScalingConfig config;
  for (const auto& [column, entry] : doc.items()) {
    if (!entry.is_object()) throw parse_error("scaling config: entry for " + column + " must be an object");
    ScaleSpec spec;
    if (!entry.contains("kind") || !entry["kind"].is_string())
      throw parse_error("scaling config: " + column + " lacks a kind");
    spec.kind = parse_scale_kind(entry["kind"].get<std::string>());
    if (entry.contains("direction")) {
      const auto d = entry["direction"].get<std::string>();
      if (d == "ascending") spec.direction = Direction::ascending;
      else if (d == "descending") spec.direction = Direction::descending;
      else throw parse_error("scaling config: bad direction '" + d + "' for " + column);
    }
    if (entry.contains("values")) {
      if (!entry["values"].is_array()) throw parse_error("scaling config: values of " + column + " must be a list");
      std::vector<std::string> vals;
      for (const auto& v : entry["values"]) vals.push_back(v.is_string() ? v.get<std::string>() : v.dump());
      spec.values = std::move(vals);
    }
    config.emplace(column, std::move(spec));
  }
  return config;
}

}  // namespace odsk
