#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "odsk/dimension.hpp"
#include "odsk/linear_extensions.hpp"
#include "odsk/order.hpp"

namespace odsk {

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Positioned order diagram. Edges are cover pairs (lower, upper).
struct Drawing {
  std::vector<std::string> labels;
  std::vector<Point> positions;
  std::vector<Pair> edges;
  std::vector<std::string> warnings;
  std::string algorithm;
  /// The two extensions behind a dimdraw layout; empty for layered ones.
  std::vector<LinearExtension> extensions;
  bool exact_realizer = false;

  std::size_t size() const { return positions.size(); }
};

/// Every edge points strictly upwards and no two nodes coincide.
inline bool is_upward(const Drawing& d) {
  for (const auto& [a, b] : d.edges)
    if (!(d.positions[a].y < d.positions[b].y)) return false;
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (const auto& p : d.positions)
    if (!seen.emplace(p.x, p.y).second) return false;
  return true;
}

struct DrawOptions {
  std::chrono::milliseconds budget{2'000};
  std::size_t sampled_pairs = 200;
  std::uint64_t seed = 0;
};

namespace detail {

inline Drawing drawing_skeleton(const Poset& p, std::string algorithm) {
  Drawing d;
  d.labels = p.elements();
  d.positions.resize(p.size());
  d.edges = covering_relation(p);
  d.algorithm = std::move(algorithm);
  return d;
}

/// Incomparable pairs that both extensions put in the same order. Zero
/// exactly when the pair realizes the poset.
inline std::size_t same_direction_count(const Poset& p, const LinearExtension& l1, const LinearExtension& l2) {
  const auto r1 = l1.rank(), r2 = l2.rank();
  std::size_t n = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (p.incomparable(a, b) && ((r1[a] < r1[b]) == (r2[a] < r2[b]))) ++n;
  return n;
}

inline void place_by_ranks(Drawing& d, const LinearExtension& l1, const LinearExtension& l2) {
  const auto r1 = l1.rank(), r2 = l2.rank();
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto a = static_cast<std::int64_t>(r1[i]), b = static_cast<std::int64_t>(r2[i]);
    d.positions[i] = {a - b, a + b};
  }
  d.extensions = {l1, l2};
}

/// Best extension pair among sampled candidates; pair s uses seeds
/// seed + 2s and seed + 2s + 1 and the lowest s wins ties.
inline std::pair<LinearExtension, LinearExtension> sampled_pair(const Poset& p, std::size_t pairs,
                                                                std::uint64_t seed) {
  std::optional<LinearExtensionCounter> counter;
  if (p.size() <= default_extension_budget) counter.emplace(p);
  const std::size_t steps = p.size() <= default_extension_budget ? 0 : 10 * p.size() * p.size();
  auto draw = [&](std::uint64_t s) {
    std::mt19937_64 rng(s);
    return counter ? counter->sample(rng) : mcmc_linear_extension(p, rng, steps);
  };
  std::optional<std::pair<LinearExtension, LinearExtension>> best;
  std::size_t best_score = 0;
  for (std::size_t s = 0; s < std::max<std::size_t>(pairs, 1); ++s) {
    auto l1 = draw(seed + 2 * s), l2 = draw(seed + 2 * s + 1);
    const auto score = same_direction_count(p, l1, l2);
    if (!best || score < best_score) {
      best.emplace(std::move(l1), std::move(l2));
      best_score = score;
    }
  }
  return *best;
}

}  // namespace detail

/// Longest-path layering (y = height level) with 8 alternating median sweeps
/// for crossing reduction. Within a layer of size s the i-th node gets
/// x = 2i - (s - 1).
inline Drawing layered(const Poset& p) {
  auto d = detail::drawing_skeleton(p, "layered");
  const auto level = height_levels(p);
  std::size_t depth = 0;
  for (auto l : level) depth = std::max(depth, l + 1);
  std::vector<std::vector<std::size_t>> layers(depth);
  for (std::size_t i = 0; i < p.size(); ++i) layers[level[i]].push_back(i);

  std::vector<std::vector<std::size_t>> below(p.size()), above(p.size());
  for (const auto& [a, b] : d.edges) {
    above[a].push_back(b);
    below[b].push_back(a);
  }
  std::vector<double> x(p.size());
  auto assign_x = [&](const std::vector<std::size_t>& layer) {
    const auto s = static_cast<double>(layer.size());
    for (std::size_t i = 0; i < layer.size(); ++i) x[layer[i]] = 2.0 * static_cast<double>(i) - (s - 1);
  };
  for (const auto& layer : layers) assign_x(layer);

  auto median_of = [&](std::size_t v, const std::vector<std::size_t>& nbrs) {
    if (nbrs.empty()) return x[v];
    std::vector<double> xs;
    for (auto u : nbrs) xs.push_back(x[u]);
    std::sort(xs.begin(), xs.end());
    const auto m = xs.size() / 2;
    return xs.size() % 2 ? xs[m] : (xs[m - 1] + xs[m]) / 2;
  };
  for (int sweep = 0; sweep < 8; ++sweep) {
    const bool down_pass = sweep % 2 == 0;  // order each layer by the layers beneath it
    for (std::size_t k = 0; k < depth; ++k) {
      auto& layer = layers[down_pass ? k : depth - 1 - k];
      std::vector<double> key;
      for (auto v : layer) key.push_back(median_of(v, down_pass ? below[v] : above[v]));
      std::vector<std::size_t> idx(layer.size());
      std::iota(idx.begin(), idx.end(), 0);
      std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
      std::vector<std::size_t> sorted;
      for (auto i : idx) sorted.push_back(layer[i]);
      layer = std::move(sorted);
      assign_x(layer);
    }
  }
  for (std::size_t l = 0; l < depth; ++l) {
    const auto s = static_cast<std::int64_t>(layers[l].size());
    for (std::size_t i = 0; i < layers[l].size(); ++i)
      d.positions[layers[l][i]] = {2 * static_cast<std::int64_t>(i) - (s - 1), static_cast<std::int64_t>(l)};
  }
  return d;
}

/// Two-extension drawing: x = r1 - r2, y = r1 + r2. When the poset has
/// dimension at most 2 the extensions form an exact realizer; otherwise the
/// sampled pair with the fewest same-direction incomparable pairs is used.
/// If the realizer search runs out of time the layered drawing is returned.
inline Drawing dimdraw(const Poset& p, const DrawOptions& opts = {}) {
  auto d = detail::drawing_skeleton(p, "dimdraw");
  if (p.is_chain()) {
    const auto l = greedy_linear_extension(p);
    detail::place_by_ranks(d, l, l);
    d.exact_realizer = true;
    return d;
  }
  const auto deadline = detail::RealizerSearch::Clock::now() + opts.budget;
  std::optional<std::vector<detail::ReversalClass>> classes;
  if (dimension_bounds(p).lower <= 2) {
    try {
      classes = detail::RealizerSearch(p, critical_pairs(p), deadline).partition(2);
    } catch (const budget_exceeded&) {
      auto fallback = layered(p);
      fallback.warnings.push_back("dimdraw: realizer search exceeded its time budget, used layered layout");
      return fallback;
    }
  }
  if (classes) {
    std::vector<LinearExtension> ext;
    for (const auto& c : *classes) ext.push_back(c.extension(p));
    while (ext.size() < 2) ext.push_back(ext.empty() ? greedy_linear_extension(p) : ext.front());
    detail::place_by_ranks(d, ext[0], ext[1]);
    d.exact_realizer = true;
    return d;
  }
  const auto [l1, l2] = detail::sampled_pair(p, opts.sampled_pairs, opts.seed);
  detail::place_by_ranks(d, l1, l2);
  d.warnings.push_back("dimdraw: order dimension exceeds 2, using the best sampled extension pair");
  return d;
}

struct DrawingQuality {
  std::size_t crossings = 0;
  std::size_t slopes = 0;
  std::optional<double> min_node_edge_distance;  // empty when no node/edge pair applies
};

namespace detail {

inline std::int64_t orientation(const Point& a, const Point& b, const Point& c) {
  const auto v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return (v > 0) - (v < 0);
}

inline bool on_segment(const Point& a, const Point& b, const Point& c) {
  return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= c.y &&
         c.y <= std::max(a.y, b.y);
}

/// Closed segments ab and cd share a point.
inline bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  const auto o1 = orientation(a, b, c), o2 = orientation(a, b, d);
  const auto o3 = orientation(c, d, a), o4 = orientation(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  return (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) ||
         (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b));
}

inline double point_segment_distance(const Point& p, const Point& a, const Point& b) {
  const double dx = static_cast<double>(b.x - a.x), dy = static_cast<double>(b.y - a.y);
  const double px = static_cast<double>(p.x - a.x), py = static_cast<double>(p.y - a.y);
  const double len2 = dx * dx + dy * dy;
  double t = len2 == 0 ? 0 : std::clamp((px * dx + py * dy) / len2, 0.0, 1.0);
  return std::hypot(px - t * dx, py - t * dy);
}

}  // namespace detail

/// Crossings count pairs of edges without a common endpoint whose segments
/// meet. Slopes are distinct reduced edge directions.
inline DrawingQuality quality(const Drawing& d) {
  DrawingQuality q;
  const auto& pos = d.positions;
  for (std::size_t i = 0; i < d.edges.size(); ++i)
    for (std::size_t j = i + 1; j < d.edges.size(); ++j) {
      const auto [a, b] = d.edges[i];
      const auto [c, e] = d.edges[j];
      if (a == c || a == e || b == c || b == e) continue;
      if (detail::segments_intersect(pos[a], pos[b], pos[c], pos[e])) ++q.crossings;
    }
  std::set<std::pair<std::int64_t, std::int64_t>> dirs;
  for (const auto& [a, b] : d.edges) {
    auto dx = pos[b].x - pos[a].x, dy = pos[b].y - pos[a].y;
    const auto g = std::gcd(dx, dy);
    if (g != 0) dx /= g, dy /= g;
    if (dy < 0 || (dy == 0 && dx < 0)) dx = -dx, dy = -dy;
    dirs.emplace(dx, dy);
  }
  q.slopes = dirs.size();
  for (std::size_t v = 0; v < d.size(); ++v)
    for (const auto& [a, b] : d.edges) {
      if (v == a || v == b) continue;
      const auto dist = detail::point_segment_distance(pos[v], pos[a], pos[b]);
      if (!q.min_node_edge_distance || dist < *q.min_node_edge_distance) q.min_node_edge_distance = dist;
    }
  return q;
}

}  // namespace odsk
