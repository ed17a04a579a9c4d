#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "odsk/context.hpp"
#include "odsk/error.hpp"
#include "odsk/order.hpp"

namespace odsk {

/// Finite metric given as a full distance matrix. Symmetry, zero diagonal
/// and non-negativity are enforced; the triangle inequality is only
/// reported (rounded geodesic data may break it slightly).
class FiniteMetric {
 public:
  FiniteMetric() = default;

  FiniteMetric(std::vector<std::string> names, std::vector<std::vector<double>> d)
      : names_(std::move(names)), d_(std::move(d)) {
    (void)Relation(names_);  // unique names
    if (d_.size() != names_.size()) throw validation_error("metric: matrix size does not match element count");
    for (std::size_t i = 0; i < d_.size(); ++i) {
      if (d_[i].size() != names_.size()) throw validation_error("metric: matrix is not square");
      if (d_[i][i] != 0) throw validation_error("metric: nonzero diagonal at " + names_[i]);
    }
    for (std::size_t i = 0; i < d_.size(); ++i)
      for (std::size_t j = 0; j < d_.size(); ++j) {
        if (d_[i][j] < 0 || std::isnan(d_[i][j]))
          throw validation_error("metric: negative distance " + names_[i] + "/" + names_[j]);
        if (d_[i][j] != d_[j][i]) throw validation_error("metric: asymmetric at " + names_[i] + "/" + names_[j]);
      }
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& elements() const { return names_; }
  double operator()(std::size_t i, std::size_t j) const { return d_[i][j]; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
  }

  /// Triples (x, y, z) with d(x, z) > d(x, y) + d(y, z).
  std::vector<std::array<std::size_t, 3>> triangle_violations() const {
    std::vector<std::array<std::size_t, 3>> out;
    const auto n = size();
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = x + 1; z < n; ++z)
          if (d_[x][z] > d_[x][y] + d_[y][z]) out.push_back({x, y, z});
    return out;
  }

  /// Same metric with elements rearranged to follow `names`.
  FiniteMetric reordered(const std::vector<std::string>& names) const {
    std::vector<std::size_t> at;
    for (const auto& n : names) {
      auto i = index_of(n);
      if (!i) throw validation_error("metric has no element " + n);
      at.push_back(*i);
    }
    std::vector<std::vector<double>> d(names.size(), std::vector<double>(names.size()));
    for (std::size_t i = 0; i < names.size(); ++i)
      for (std::size_t j = 0; j < names.size(); ++j) d[i][j] = d_[at[i]][at[j]];
    return FiniteMetric(names, std::move(d));
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<double>> d_;
};

/// Elements with a binary relation R and a metric d over the same names.
struct OmSpace {
  Relation relation;
  FiniteMetric metric;

  OmSpace(Relation r, const FiniteMetric& d) : relation(std::move(r)), metric(d.reordered(relation.elements())) {}
};

/// Directed parts of the Hausdorff distance: forward = max over A of the
/// distance to B, backward = max over B of the distance to A.
struct HausdorffParts {
  double forward = 0;
  double backward = 0;
  double value() const { return std::max(forward, backward); }
};

inline HausdorffParts hausdorff_parts(const FiniteMetric& d, const Bitset& a, const Bitset& b) {
  if (a.none() || b.none()) throw validation_error("hausdorff distance needs nonempty sets");
  auto directed = [&](const Bitset& from, const Bitset& to) {
    double worst = 0;
    for_each_bit(from, [&](std::size_t x) {
      double nearest = std::numeric_limits<double>::infinity();
      for_each_bit(to, [&](std::size_t y) { nearest = std::min(nearest, d(x, y)); });
      worst = std::max(worst, nearest);
    });
    return worst;
  };
  return {directed(a, b), directed(b, a)};
}

inline double hausdorff(const FiniteMetric& d, const Bitset& a, const Bitset& b) {
  return hausdorff_parts(d, a, b).value();
}

struct Distortion {
  double value = 0;
  std::optional<Pair> witness;  // first maximizing pair (i < j)
};

/// Largest gap |d(x, y) - d_H(R(x), R(y))| with R(x) = {y : (x, y) in R}.
/// Each R(x) must be nonempty; `reflexive_close` adds the loops first.
inline Distortion relational_distortion(const OmSpace& s, bool reflexive_close = false) {
  const auto n = s.relation.size();
  std::vector<Bitset> image;
  for (std::size_t x = 0; x < n; ++x) {
    Bitset r = s.relation.row(x);
    if (reflexive_close) r.set(x);
    if (r.none()) throw validation_error("relational image of " + s.relation.name(x) + " is empty");
    image.push_back(std::move(r));
  }
  Distortion out;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      const double gap = std::abs(s.metric(x, y) - hausdorff(s.metric, image[x], image[y]));
      if (!out.witness || gap > out.value) {
        out.value = gap;
        out.witness = Pair{x, y};
      }
    }
  return out;
}

/// Objects related iff they share at least one attribute.
inline Relation shared_attribute_relation(const FormalContext& ctx) {
  Relation r(ctx.objects());
  for (std::size_t g = 0; g < ctx.object_count(); ++g)
    for (std::size_t h = 0; h < ctx.object_count(); ++h)
      if ((ctx.row(g) & ctx.row(h)).any()) r.add(g, h);
  return r;
}

/// Pseudometric on attributes: Hausdorff distance between extents.
/// Attributes with an empty extent are listed and their distances left empty.
struct MediatedMetric {
  std::vector<std::string> attributes;
  std::vector<std::vector<std::optional<double>>> d;
  std::vector<std::size_t> empty_extents;
};

inline MediatedMetric mediated_metric(const FormalContext& ctx, const FiniteMetric& objects_metric) {
  const auto metric = objects_metric.reordered(ctx.objects());
  MediatedMetric out;
  out.attributes = ctx.attributes();
  const auto n = ctx.attribute_count();
  for (std::size_t m = 0; m < n; ++m)
    if (ctx.column(m).none()) out.empty_extents.push_back(m);
  out.d.assign(n, std::vector<std::optional<double>>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (ctx.column(a).any() && ctx.column(b).any()) out.d[a][b] = hausdorff(metric, ctx.column(a), ctx.column(b));
  return out;
}

/// g <= h iff g has at most as many attributes as h.
inline QuasiOrder valuation_order(const FormalContext& ctx) {
  std::vector<double> counts;
  for (std::size_t g = 0; g < ctx.object_count(); ++g) counts.push_back(static_cast<double>(ctx.row(g).count()));
  return QuasiOrder::from_scores(ctx.objects(), counts);
}

/// Pairs a < b in the poset that the linear quasi-order ranks the other way
/// round (b strictly below a).
inline std::size_t disagreement(const Poset& p, const QuasiOrder& o) {
  if (p.elements() != o.elements()) throw validation_error("disagreement: element lists differ");
  std::size_t count = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.lt(a, b) && o.lt(b, a)) ++count;
  return count;
}

}  // namespace odsk
