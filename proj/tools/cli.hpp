#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "odsk/odsk.hpp"

namespace odsk::cli {

using Json = nlohmann::ordered_json;

enum Exit : int { ok = 0, usage = 1, bad_input = 2, over_budget = 3 };

namespace detail {

inline bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

inline std::string join(const std::vector<std::string>& items, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

inline std::vector<std::string> names_of(const std::vector<std::string>& names, const Bitset& set) {
  std::vector<std::string> out;
  for_each_bit(set, [&](std::size_t i) { out.push_back(names[i]); });
  return out;
}

inline std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_null()) return "-";
  if (v.is_array()) {
    std::vector<std::string> parts;
    for (const auto& x : v) parts.push_back(scalar_text(x));
    return join(parts);
  }
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (d == std::floor(d) && std::abs(d) < 1e15) return std::to_string(static_cast<long long>(d));
  }
  return v.dump();
}

/// Text form of a report: scalars as "key: value"; arrays as a "key:" line
/// followed by indented TSV rows (objects get a "# header" row first).
inline void write_text(std::ostream& out, const Json& doc) {
  for (const auto& [key, v] : doc.items()) {
    if (!v.is_array() && !v.is_object()) {
      out << key << ": " << scalar_text(v) << '\n';
      continue;
    }
    if (v.is_object()) {
      for (const auto& [sub, x] : v.items()) out << key << '.' << sub << ": " << scalar_text(x) << '\n';
      continue;
    }
    out << key << ":\n";
    if (!v.empty() && v.front().is_object()) {
      std::vector<std::string> header;
      for (const auto& [k, x] : v.front().items()) header.push_back(k);
      out << "  # " << join(header, "\t") << '\n';
    }
    for (const auto& row : v) {
      std::vector<std::string> cells;
      if (row.is_object())
        for (const auto& [k, x] : row.items()) cells.push_back(scalar_text(x));
      else if (row.is_array())
        for (const auto& x : row) cells.push_back(scalar_text(x));
      else
        cells.push_back(scalar_text(row));
      out << "  " << join(cells, "\t") << '\n';
    }
  }
}

inline std::chrono::milliseconds budget_from(std::optional<long long> flag, long long fallback) {
  if (flag) return std::chrono::milliseconds(*flag);
  if (const char* env = std::getenv("ODSK_BUDGET_MS")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return std::chrono::milliseconds(v);
    throw validation_error(std::string("ODSK_BUDGET_MS is not a positive integer: ") + env);
  }
  return std::chrono::milliseconds(fallback);
}

/// Rows of the table as a linear quasi-order on the named column.
inline std::vector<double> numeric_column(const ManyValuedTable& t, const std::string& column) {
  const auto col = t.column_index(column);
  if (!col) throw validation_error("table has no column " + column);
  std::vector<double> out;
  for (std::size_t g = 0; g < t.objects.size(); ++g) {
    const auto v = parse_number(t.cells[g][*col]);
    if (!v) throw validation_error("column " + column + ": not a number: " + t.cells[g][*col]);
    out.push_back(*v);
  }
  return out;
}

struct Options {
  bool json = false;
  std::string input;
  std::string second;
  std::string spec;
  std::string output;
  std::string algo = "dimdraw";
  std::optional<std::size_t> max_k;
  std::optional<long long> budget_ms;
  std::size_t k = 2;
  std::uint64_t seed = 0;
  bool no_quotient = false;
  bool verify_points = false;
  bool reflexive_close = false;
  bool reduced_labels = false;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  void emit(const Json& doc) {
    if (o_.json) out_ << doc.dump(2) << '\n';
    else write_text(out_, doc);
  }

  void concepts_cmd() {
    const auto ctx = io::read_cxt(o_.input);
    const auto lattice = odsk::concepts(ctx);
    Json doc;
    doc["objects"] = ctx.object_count();
    doc["attributes"] = ctx.attribute_count();
    doc["concepts"] = lattice.size();
    Json rows = Json::array();
    for (std::size_t i = 0; i < lattice.size(); ++i)
      rows.push_back({{"id", "c" + std::to_string(i)},
                      {"extent", names_of(ctx.objects(), lattice[i].extent)},
                      {"intent", names_of(ctx.attributes(), lattice[i].intent)}});
    doc["list"] = rows;
    emit(doc);
  }

  void implications_cmd() {
    const auto ctx = io::read_cxt(o_.input);
    const auto base = canonical_base(ctx);
    Json doc;
    doc["implications"] = base.size();
    Json rows = Json::array();
    for (const auto& imp : base)
      rows.push_back({{"premise", names_of(ctx.attributes(), imp.premise)},
                      {"conclusion", names_of(ctx.attributes(), imp.conclusion)},
                      {"support", common_objects(ctx, imp.premise).count()}});
    doc["base"] = rows;
    emit(doc);
  }

  void guttman_cmd() {
    const auto ctx = io::read_cxt(o_.input);
    const auto r = is_guttman(ctx);
    Json doc;
    doc["guttman"] = r.guttman;
    if (r.witness) {
      Json objs = Json::array(), attrs = Json::array();
      for (std::size_t g = 0; g < ctx.object_count(); ++g) objs.push_back({{"object", ctx.object(g)}, {"s", r.witness->s[g]}});
      for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
        attrs.push_back({{"attribute", ctx.attribute(m)}, {"e", r.witness->e[m]}});
      doc["object_ranks"] = objs;
      doc["attribute_ranks"] = attrs;
    }
    emit(doc);
  }

  void complete_cmd() {
    const auto p = io::read_poset(o_.input);
    const auto c = dedekind_macneille(p);
    const auto order = completion_order(c, p);
    Json doc;
    doc["elements"] = p.size();
    doc["completion"] = order.size();
    Json added = Json::array();
    for (auto i : c.new_nodes) added.push_back(order.name(i));
    doc["new"] = added;
    Json covers = Json::array();
    for (const auto& [a, b] : covering_relation(order)) covers.push_back({order.name(a), order.name(b)});
    doc["covers"] = covers;
    if (!o_.output.empty()) io::write_file(o_.output, io::format_poset(order));
    emit(doc);
  }

  /// Poset from a .tsv edge list, or from a table plus scaling spec.
  Poset load_order(Json& doc, std::optional<ManyValuedTable>& table) {
    if (!ends_with(o_.input, ".csv")) return io::read_poset(o_.input);
    if (o_.spec.empty()) throw validation_error("a table input needs --spec <scaling.json>");
    table = io::read_table_csv(o_.input);
    const auto structure = ordinal_structure(*table, parse_scaling_config(io::read_file(o_.spec)));
    if (o_.no_quotient) return strict_domination_order(structure);
    auto q = product_order(structure);
    if (q.poset.size() != table->objects.size()) doc["merged_ties"] = table->objects.size() - q.poset.size();
    return std::move(q.poset);
  }

  void dimension_cmd() {
    Json doc;
    std::optional<ManyValuedTable> table;
    const auto p = load_order(doc, table);
    DimensionOptions opts;
    if (o_.max_k) opts.max_k = *o_.max_k;
    opts.budget = budget_from(o_.budget_ms, 60'000);
    const auto pairs = critical_pairs(p);
    doc["elements"] = p.size();
    doc["critical_pairs"] = pairs.size();
    if (o_.verify_points) verify_points(doc, p, table);
    try {
      const auto r = order_dimension(p, opts);
      doc["dimension"] = r.dimension;
      doc["verified"] = intersect_linear_orders(p.elements(), r.realizer) == p;
      Json realizer = Json::array();
      for (const auto& ext : r.realizer) {
        Json names = Json::array();
        for (auto i : ext.order) names.push_back(p.name(i));
        realizer.push_back(names);
      }
      doc["realizer"] = realizer;
      emit(doc);
    } catch (const budget_exceeded& e) {
      if (e.bounds()) {
        doc["lower_bound"] = e.bounds()->lower;
        doc["upper_bound"] = e.bounds()->upper;
      }
      doc["error"] = e.what();
      emit(doc);
      throw;
    }
  }

  /// Checks Pts = 3W + D row by row and that ranking by Pts, then GD, is a
  /// linear extension of the order.
  void verify_points(Json& doc, const Poset& p, const std::optional<ManyValuedTable>& table) {
    if (!table) throw validation_error("--verify-points needs a table input");
    const auto w = numeric_column(*table, "W"), d = numeric_column(*table, "D");
    const auto pts = numeric_column(*table, "Pts"), gd = numeric_column(*table, "GD");
    Json bad = Json::array();
    for (std::size_t g = 0; g < w.size(); ++g)
      if (pts[g] != 3 * w[g] + d[g]) bad.push_back(table->objects[g]);
    doc["points_consistent"] = bad.empty();
    if (!bad.empty()) doc["points_mismatch"] = bad;

    std::vector<std::size_t> idx(w.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return pts[a] != pts[b] ? pts[a] < pts[b] : gd[a] < gd[b];
    });
    bool ties = false;
    for (std::size_t k = 1; k < idx.size(); ++k)
      ties = ties || (pts[idx[k]] == pts[idx[k - 1]] && gd[idx[k]] == gd[idx[k - 1]]);
    LinearExtension ext;
    for (auto g : idx) {
      const auto i = p.index_of(table->objects[g]);
      if (!i) throw validation_error("--verify-points needs one element per table row (ties were merged)");
      ext.order.push_back(*i);
    }
    doc["ranking_is_linear_extension"] = !ties && is_linear_extension(p, ext);
  }

  void pareto_cmd() {
    if (o_.spec.empty()) throw validation_error("pareto needs --spec <scaling.json>");
    const auto table = io::read_table_csv(o_.input);
    const auto s = ordinal_structure(table, parse_scaling_config(io::read_file(o_.spec)));
    Json doc;
    Json maxima = Json::array();
    for (auto i : pareto_maxima(s)) maxima.push_back(s.elements()[i]);
    doc["pareto_maxima"] = maxima.size();
    doc["list"] = maxima;
    emit(doc);
  }

  void scale_cmd() {
    if (o_.spec.empty()) throw validation_error("scale needs --spec <scaling.json>");
    const auto table = io::read_table_csv(o_.input);
    const auto ctx = apply_scaling(table, parse_scaling_config(io::read_file(o_.spec)));
    if (o_.output.empty()) {
      out_ << io::format_cxt(ctx);
      return;
    }
    io::write_file(o_.output, io::format_cxt(ctx));
    Json doc;
    doc["objects"] = ctx.object_count();
    doc["attributes"] = ctx.attribute_count();
    doc["written"] = o_.output;
    emit(doc);
  }

  void order_cmd() {
    Json doc;
    std::optional<ManyValuedTable> table;
    if (!ends_with(o_.input, ".csv")) throw validation_error("order needs a table (.csv) input");
    const auto p = load_order(doc, table);
    if (o_.output.empty()) {
      out_ << io::format_poset(p);
      return;
    }
    io::write_file(o_.output, io::format_poset(p));
    doc["elements"] = p.size();
    doc["written"] = o_.output;
    emit(doc);
  }

  void factors_cmd() {
    const auto ctx = io::read_cxt(o_.input);
    const auto fz = ordinal_factorization(ctx, o_.k);
    Json doc;
    doc["incidences"] = ctx.incidence_count();
    doc["factors"] = fz.factors.size();
    Json chains = Json::array();
    for (std::size_t f = 0; f < fz.factors.size(); ++f) {
      for (std::size_t level = 0; level < fz.factors[f].chain.size(); ++level) {
        const auto& c = fz.factors[f].chain[level];
        chains.push_back({{"factor", f + 1},
                          {"level", level + 1},
                          {"extent", names_of(ctx.objects(), c.extent)},
                          {"intent", names_of(ctx.attributes(), c.intent)}});
      }
    }
    doc["chains"] = chains;
    doc["covered"] = fz.covered.size();
    doc["uncovered"] = fz.uncovered.size();
    Json cells = Json::array();
    for (const auto& [g, m] : fz.uncovered.pairs()) cells.push_back({ctx.object(g), ctx.attribute(m)});
    doc["uncovered_cells"] = cells;
    emit(doc);
  }

  void distortion_cmd() {
    const auto metric = io::read_distance_csv(o_.second);
    Relation r;
    if (ends_with(o_.input, ".cxt")) r = shared_attribute_relation(io::read_cxt(o_.input));
    else r = io::read_poset(o_.input).relation();
    warn_triangles(metric);
    const OmSpace space(r, metric);
    const auto d = relational_distortion(space, o_.reflexive_close);
    Json doc;
    doc["elements"] = r.size();
    doc["distortion"] = d.value;
    if (d.witness) doc["witness"] = {r.name(d.witness->first), r.name(d.witness->second)};
    emit(doc);
  }

  void mediate_cmd() {
    const auto ctx = io::read_cxt(o_.input);
    const auto metric = io::read_distance_csv(o_.second);
    warn_triangles(metric);
    const auto mm = mediated_metric(ctx, metric);
    Json doc;
    doc["attributes"] = mm.attributes.size();
    Json empty = Json::array();
    for (auto m : mm.empty_extents) empty.push_back(mm.attributes[m]);
    if (!empty.empty()) doc["empty_extents"] = empty;
    Json pairs = Json::array();
    for (std::size_t a = 0; a < mm.attributes.size(); ++a)
      for (std::size_t b = a + 1; b < mm.attributes.size(); ++b)
        pairs.push_back({{"a", mm.attributes[a]}, {"b", mm.attributes[b]},
                         {"distance", mm.d[a][b] ? Json(*mm.d[a][b]) : Json()}});
    doc["pairs"] = pairs;
    Json matrix = Json::array();
    for (std::size_t a = 0; a < mm.attributes.size(); ++a) {
      Json row;
      row["attribute"] = mm.attributes[a];
      for (std::size_t b = 0; b < mm.attributes.size(); ++b)
        row[mm.attributes[b]] = mm.d[a][b] ? Json(*mm.d[a][b]) : Json();
      matrix.push_back(row);
    }
    doc["matrix"] = matrix;
    emit(doc);
  }

  void draw_cmd() {
    Poset p;
    std::vector<std::string> labels;
    if (ends_with(o_.input, ".cxt")) {
      const auto ctx = io::read_cxt(o_.input);
      const auto lattice = odsk::concepts(ctx);
      p = lattice.order();
      labels = concept_labels(ctx, lattice);
    } else {
      p = io::read_poset(o_.input);
      labels = p.elements();
    }
    Drawing d;
    if (o_.algo == "layered") {
      d = layered(p);
    } else if (o_.algo == "dimdraw") {
      DrawOptions opts;
      opts.budget = budget_from(o_.budget_ms, 2'000);
      opts.seed = o_.seed;
      d = dimdraw(p, opts);
    } else {
      throw validation_error("unknown layout algorithm: " + o_.algo);
    }
    d.labels = labels;
    for (const auto& w : d.warnings) err_ << "warning: " << w << '\n';
    const bool dot = ends_with(o_.output, ".dot");
    const auto document = dot ? render_dot(d) : render_svg(d);
    if (o_.output.empty() && !o_.json) {
      out_ << document;
      return;
    }
    const auto q = quality(d);
    Json doc;
    doc["algorithm"] = d.algorithm;
    doc["elements"] = d.size();
    doc["edges"] = d.edges.size();
    doc["exact_realizer"] = d.exact_realizer;
    doc["crossings"] = q.crossings;
    doc["slopes"] = q.slopes;
    doc["min_node_edge_distance"] = q.min_node_edge_distance ? Json(*q.min_node_edge_distance) : Json();
    if (!o_.output.empty()) {
      io::write_file(o_.output, document);
      doc["written"] = o_.output;
    } else {
      doc["document"] = document;
    }
    emit(doc);
  }

 private:
  void warn_triangles(const FiniteMetric& m) {
    const auto v = m.triangle_violations();
    if (!v.empty())
      err_ << "warning: " << v.size() << " triangle inequality violations, e.g. " << m.elements()[v[0][0]] << ", "
           << m.elements()[v[0][1]] << ", " << m.elements()[v[0][2]] << '\n';
  }

  std::vector<std::string> concept_labels(const FormalContext& ctx, const ConceptLattice& lattice) {
    std::vector<std::string> labels(lattice.size());
    if (!o_.reduced_labels) {
      for (std::size_t i = 0; i < lattice.size(); ++i)
        labels[i] = "{" + join(names_of(ctx.attributes(), lattice[i].intent)) + "} {" +
                    join(names_of(ctx.objects(), lattice[i].extent)) + "}";
      return labels;
    }
    std::vector<std::vector<std::string>> attrs(lattice.size()), objs(lattice.size());
    const auto ac = attribute_concepts(ctx, lattice);
    const auto oc = object_concepts(ctx, lattice);
    for (std::size_t m = 0; m < ac.size(); ++m) attrs[ac[m]].push_back(ctx.attribute(m));
    for (std::size_t g = 0; g < oc.size(); ++g) objs[oc[g]].push_back(ctx.object(g));
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      labels[i] = join(attrs[i]);
      if (!attrs[i].empty() && !objs[i].empty()) labels[i] += " / ";
      labels[i] += join(objs[i]);
    }
    return labels;
  }

  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace detail

/// Runs one command; args excludes the program name. Returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  detail::Options o;
  CLI::App app{"Ordinal data analysis toolkit", "odsk"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Emit JSON instead of key: value text");

  auto* concepts = app.add_subcommand("concepts", "List all formal concepts of a context");
  concepts->add_option("context", o.input, "Burmeister .cxt file")->required();
  auto* implications = app.add_subcommand("implications", "Canonical implication base of a context");
  implications->add_option("context", o.input, "Burmeister .cxt file")->required();
  auto* guttman = app.add_subcommand("guttman", "Test whether a context is a Guttman scale");
  guttman->add_option("context", o.input, "Burmeister .cxt file")->required();
  auto* complete = app.add_subcommand("complete", "Dedekind-MacNeille completion of a poset");
  complete->add_option("poset", o.input, "Edge list (.tsv)")->required();
  complete->add_option("-o,--output", o.output, "Write the completion as an edge list");

  auto* dimension = app.add_subcommand("dimension", "Order dimension with a verified realizer");
  dimension->add_option("input", o.input, "Edge list (.tsv) or table (.csv)")->required();
  dimension->add_option("--spec", o.spec, "Scaling spec (JSON) for table input");
  dimension->add_option("--max-k", o.max_k, "Largest dimension to try");
  dimension->add_option("--budget-ms", o.budget_ms, "Time budget in milliseconds");
  dimension->add_flag("--no-quotient", o.no_quotient, "Treat tied objects as incomparable instead of merging them");
  dimension->add_flag("--verify-points", o.verify_points, "Check Pts = 3W + D and the Pts/GD ranking");

  auto* pareto = app.add_subcommand("pareto", "Pareto-maximal objects of a table");
  pareto->add_option("table", o.input, "Table (.csv)")->required();
  pareto->add_option("--spec", o.spec, "Scaling spec (JSON)")->required();

  auto* scale = app.add_subcommand("scale", "Conceptual scaling of a table to a context");
  scale->add_option("table", o.input, "Table (.csv)")->required();
  scale->add_option("--spec", o.spec, "Scaling spec (JSON)")->required();
  scale->add_option("-o,--output", o.output, "Output .cxt file");

  auto* order = app.add_subcommand("order", "Domination order of a table as an edge list");
  order->add_option("table", o.input, "Table (.csv)")->required();
  order->add_option("--spec", o.spec, "Scaling spec (JSON)")->required();
  order->add_option("-o,--output", o.output, "Output .tsv file");
  order->add_flag("--no-quotient", o.no_quotient, "Treat tied objects as incomparable instead of merging them");

  auto* factors = app.add_subcommand("factors", "Greedy ordinal factorization");
  factors->add_option("context", o.input, "Burmeister .cxt file")->required();
  factors->add_option("-k", o.k, "Number of factors")->check(CLI::PositiveNumber);

  auto* omspace = app.add_subcommand("omspace", "Ordinal-metric space measures");
  omspace->require_subcommand(1);
  auto* distortion = omspace->add_subcommand("distortion", "Relational distortion of a relation w.r.t. a metric");
  distortion->add_option("relation", o.input, "Edge list (.tsv, order relation) or .cxt (shared attribute)")->required();
  distortion->add_option("distances", o.second, "Distance table (.csv)")->required();
  distortion->add_flag("--reflexive-close", o.reflexive_close, "Add loops before measuring");
  auto* mediate = omspace->add_subcommand("mediate", "Hausdorff metric on attributes via their extents");
  mediate->add_option("context", o.input, "Burmeister .cxt file")->required();
  mediate->add_option("distances", o.second, "Distance table (.csv) over the objects")->required();

  auto* draw = app.add_subcommand("draw", "Draw an order diagram");
  draw->add_option("input", o.input, "Edge list (.tsv) or context (.cxt)")->required();
  draw->add_option("--algo", o.algo, "dimdraw or layered")->check(CLI::IsMember({"dimdraw", "layered"}));
  draw->add_option("-o,--output", o.output, "Output file (.svg or .dot)");
  draw->add_option("--seed", o.seed, "Seed for extension sampling");
  draw->add_option("--budget-ms", o.budget_ms, "Time budget for the realizer search");
  draw->add_flag("--reduced-labels", o.reduced_labels, "Label concepts with introduced objects/attributes only");

  std::vector<std::string> argv_store{"odsk"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Exit::ok : Exit::usage;
  }

  detail::Runner runner(o, out, err);
  try {
    if (*concepts) runner.concepts_cmd();
    else if (*implications) runner.implications_cmd();
    else if (*guttman) runner.guttman_cmd();
    else if (*complete) runner.complete_cmd();
    else if (*dimension) runner.dimension_cmd();
    else if (*pareto) runner.pareto_cmd();
    else if (*scale) runner.scale_cmd();
    else if (*order) runner.order_cmd();
    else if (*factors) runner.factors_cmd();
    else if (*distortion) runner.distortion_cmd();
    else if (*mediate) runner.mediate_cmd();
    else if (*draw) runner.draw_cmd();
  } catch (const budget_exceeded& e) {
    err << "error: " << e.what() << '\n';
    return Exit::over_budget;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return Exit::bad_input;
  } catch (const validation_error& e) {
    err << "error: " << e.what() << '\n';
    return Exit::bad_input;
  }
  return Exit::ok;
}

}  // namespace odsk::cli
