#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "odsk/bitset.hpp"
#include "odsk/error.hpp"

namespace odsk {

/// Objects x attributes incidence table. Both row (object -> attributes) and
/// column (attribute -> objects) bitsets are kept in sync.
class FormalContext {
 public:
  FormalContext() = default;

  FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes)
      : objects_(std::move(objects)), attributes_(std::move(attributes)) {
    index_names(objects_, object_index_, "object");
    index_names(attributes_, attribute_index_, "attribute");
    rows_.assign(objects_.size(), Bitset(attributes_.size()));
    cols_.assign(attributes_.size(), Bitset(objects_.size()));
  }

  FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                const std::vector<Bitset>& rows)
      : FormalContext(std::move(objects), std::move(attributes)) {
    if (rows.size() != objects_.size()) throw validation_error("row count does not match object count");
    for (std::size_t g = 0; g < rows.size(); ++g) {
      if (rows[g].size() != attributes_.size())
        throw validation_error("row width does not match attribute count");
      for_each_bit(rows[g], [&](std::size_t m) { set(g, m); });
    }
  }

  std::size_t object_count() const { return objects_.size(); }
  std::size_t attribute_count() const { return attributes_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<std::string>& attributes() const { return attributes_; }
  const std::string& object(std::size_t g) const { return objects_.at(g); }
  const std::string& attribute(std::size_t m) const { return attributes_.at(m); }

  std::optional<std::size_t> object_index(std::string_view name) const { return lookup(object_index_, name); }
  std::optional<std::size_t> attribute_index(std::string_view name) const {
    return lookup(attribute_index_, name);
  }

  bool incident(std::size_t g, std::size_t m) const { return rows_[g].test(m); }

  void set(std::size_t g, std::size_t m, bool value = true) {
    rows_.at(g).set(m, value);
    cols_.at(m).set(g, value);
  }

  /// Attributes of object g.
  const Bitset& row(std::size_t g) const { return rows_[g]; }
  /// Objects having attribute m.
  const Bitset& column(std::size_t m) const { return cols_[m]; }

  std::size_t incidence_count() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.count();
    return n;
  }

  FormalContext transposed() const {
    FormalContext t(attributes_, objects_);
    t.rows_ = cols_;
    t.cols_ = rows_;
    return t;
  }

  Bitset all_objects() const { return full_bitset(object_count()); }
  Bitset all_attributes() const { return full_bitset(attribute_count()); }

  friend bool operator==(const FormalContext& a, const FormalContext& b) {
    return a.objects_ == b.objects_ && a.attributes_ == b.attributes_ && a.rows_ == b.rows_;
  }

 private:
  using Index = std::map<std::string, std::size_t, std::less<>>;

  static void index_names(const std::vector<std::string>& names, Index& index, const char* what) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (!index.emplace(names[i], i).second)
        throw validation_error(std::string("duplicate ") + what + " name: " + names[i]);
  }

  static std::optional<std::size_t> lookup(const Index& index, std::string_view name) {
    auto it = index.find(name);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  Index object_index_;
  Index attribute_index_;
  std::vector<Bitset> rows_;
  std::vector<Bitset> cols_;
};

/// A' for an object set: the attributes shared by all of them.
inline Bitset common_attributes(const FormalContext& ctx, const Bitset& objects) {
  Bitset out = ctx.all_attributes();
  for_each_bit(objects, [&](std::size_t g) { out &= ctx.row(g); });
  return out;
}

/// B' for an attribute set: the objects having all of them.
inline Bitset common_objects(const FormalContext& ctx, const Bitset& attributes) {
  Bitset out = ctx.all_objects();
  for_each_bit(attributes, [&](std::size_t m) { out &= ctx.column(m); });
  return out;
}

enum class Side { objects, attributes };

/// Prime operator applied to a subset of the given side.
inline Bitset derive(const FormalContext& ctx, Side side, const Bitset& s) {
  return side == Side::objects ? common_attributes(ctx, s) : common_objects(ctx, s);
}

inline Bitset attribute_closure(const FormalContext& ctx, const Bitset& attributes) {
  return common_attributes(ctx, common_objects(ctx, attributes));
}

inline Bitset object_closure(const FormalContext& ctx, const Bitset& objects) {
  return common_objects(ctx, common_attributes(ctx, objects));
}

inline Bitset attribute_set(const FormalContext& ctx, const std::vector<std::string>& names) {
  Bitset out(ctx.attribute_count());
  for (const auto& n : names) {
    auto m = ctx.attribute_index(n);
    if (!m) throw validation_error("unknown attribute: " + n);
    out.set(*m);
  }
  return out;
}

inline Bitset object_set(const FormalContext& ctx, const std::vector<std::string>& names) {
  Bitset out(ctx.object_count());
  for (const auto& n : names) {
    auto g = ctx.object_index(n);
    if (!g) throw validation_error("unknown object: " + n);
    out.set(*g);
  }
  return out;
}

/// Result of merging identical rows and columns. Groups list the original
/// indices behind each new object/attribute.
struct Clarified {
  FormalContext context;
  std::vector<std::vector<std::size_t>> object_groups;
  std::vector<std::vector<std::size_t>> attribute_groups;
};

namespace detail {

inline std::vector<std::vector<std::size_t>> group_identical(const std::vector<Bitset>& sets) {
  std::vector<std::vector<std::size_t>> groups;
  std::map<Bitset, std::size_t> seen;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    auto [it, fresh] = seen.emplace(sets[i], groups.size());
    if (fresh) groups.push_back({i});
    else groups[it->second].push_back(i);
  }
  return groups;
}

inline std::string joined(const std::vector<std::string>& names, const std::vector<std::size_t>& group) {
  std::string out;
  for (std::size_t k = 0; k < group.size(); ++k) {
    if (k) out += '+';
    out += names[group[k]];
  }
  return out;
}

}  // namespace detail

inline Clarified clarify(const FormalContext& ctx) {
  std::vector<Bitset> rows, cols;
  for (std::size_t g = 0; g < ctx.object_count(); ++g) rows.push_back(ctx.row(g));
  for (std::size_t m = 0; m < ctx.attribute_count(); ++m) cols.push_back(ctx.column(m));
  Clarified out;
  out.object_groups = detail::group_identical(rows);
  out.attribute_groups = detail::group_identical(cols);

  std::vector<std::string> objects, attributes;
  for (const auto& grp : out.object_groups) objects.push_back(detail::joined(ctx.objects(), grp));
  for (const auto& grp : out.attribute_groups) attributes.push_back(detail::joined(ctx.attributes(), grp));
  FormalContext c(std::move(objects), std::move(attributes));
  for (std::size_t g = 0; g < out.object_groups.size(); ++g)
    for (std::size_t m = 0; m < out.attribute_groups.size(); ++m)
      if (ctx.incident(out.object_groups[g].front(), out.attribute_groups[m].front())) c.set(g, m);
  out.context = std::move(c);
  return out;
}

}  // namespace odsk
