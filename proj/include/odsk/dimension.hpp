#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "odsk/linear_extensions.hpp"
#include "odsk/order.hpp"

namespace odsk {

/// Incomparable (a, b) such that everything below a is below b and
/// everything above b is above a. Listed in lexicographic index order.
inline std::vector<Pair> critical_pairs(const Poset& p) {
  std::vector<Pair> out;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (a == b || !p.incomparable(a, b)) continue;
      Bitset below_a = p.down(a), above_b = p.up(b);
      below_a.reset(a);
      above_b.reset(b);
      if (below_a.is_subset_of(p.down(b)) && above_b.is_subset_of(p.up(a))) out.emplace_back(a, b);
    }
  return out;
}

namespace detail {

/// Transitively closed order for one realizer member: the poset plus the
/// reversals (b below a) of the critical pairs assigned to it.
class ReversalClass {
 public:
  explicit ReversalClass(const Poset& p) {
    for (std::size_t i = 0; i < p.size(); ++i) up_.push_back(p.up(i));
  }

  bool reverses(const Pair& cp) const { return up_[cp.second].test(cp.first); }

  /// Adds "b below a" for cp = (a, b); false (and no change) on a cycle.
  bool try_reverse(const Pair& cp) {
    const auto [a, b] = cp;
    if (up_[a].test(b)) return false;
    const Bitset above_a = up_[a];
    for (std::size_t x = 0; x < up_.size(); ++x)
      if (up_[x].test(b)) up_[x] |= above_a;
    reversed_.push_back(cp);
    return true;
  }

  const std::vector<Pair>& reversed() const { return reversed_; }

  /// Linear extension of this class's order, smallest-name-first tie-break.
  LinearExtension extension(const Poset& p) const {
    std::vector<Pair> extra;
    for (const auto& [a, b] : reversed_) extra.emplace_back(b, a);
    return greedy_linear_extension(p, extra);
  }

 private:
  std::vector<Bitset> up_;
  std::vector<Pair> reversed_;
};

/// First-fit peeling: each round builds one class greedily from the pairs
/// not yet reversed by earlier extensions.
inline std::vector<LinearExtension> greedy_realizer(const Poset& p, const std::vector<Pair>& pairs) {
  std::vector<LinearExtension> out;
  std::vector<Pair> remaining = pairs;
  do {
    ReversalClass cls(p);
    for (const auto& cp : remaining) cls.try_reverse(cp);
    out.push_back(cls.extension(p));
    const auto rank = out.back().rank();
    std::erase_if(remaining, [&](const Pair& cp) { return rank[cp.second] < rank[cp.first]; });
  } while (!remaining.empty());
  return out;
}

/// Searches for an induced standard example S3 (a_i < b_j iff i != j).
/// Gives up after `cap` candidate tuples.
inline bool find_standard_example_3(const Poset& p, std::size_t cap) {
  std::vector<Pair> incomparable;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (a != b && p.incomparable(a, b)) incomparable.emplace_back(a, b);
  std::size_t tried = 0;
  auto distinct = [](std::initializer_list<std::size_t> xs) {
    for (auto i = xs.begin(); i != xs.end(); ++i)
      for (auto j = i + 1; j != xs.end(); ++j)
        if (*i == *j) return false;
    return true;
  };
  for (std::size_t i = 0; i < incomparable.size(); ++i) {
    const auto [a1, b1] = incomparable[i];
    for (std::size_t j = i + 1; j < incomparable.size(); ++j) {
      const auto [a2, b2] = incomparable[j];
      if (++tried > cap) return false;
      if (!p.lt(a1, b2) || !p.lt(a2, b1) || !distinct({a1, b1, a2, b2})) continue;
      for (std::size_t k = j + 1; k < incomparable.size(); ++k) {
        const auto [a3, b3] = incomparable[k];
        if (++tried > cap) return false;
        if (p.lt(a1, b3) && p.lt(a2, b3) && p.lt(a3, b1) && p.lt(a3, b2) && distinct({a1, b1, a2, b2, a3, b3}))
          return true;
      }
    }
  }
  return false;
}

}  // namespace detail

inline constexpr std::size_t standard_example_scan_cap = 100'000;

/// lower: 1 for chains, else 2, or 3 once an S3 suborder is found.
/// upper: min(width, size of a first-fit greedy realizer).
inline dimension_bounds_t dimension_bounds(const Poset& p) {
  if (p.is_chain()) return {1, 1};
  dimension_bounds_t b;
  b.lower = detail::find_standard_example_3(p, standard_example_scan_cap) ? 3 : 2;
  b.upper = std::min(width_height(p).width, detail::greedy_realizer(p, critical_pairs(p)).size());
  return b;
}

struct DimensionOptions {
  std::size_t max_k = 8;
  std::chrono::milliseconds budget{60'000};
};

struct DimensionResult {
  std::size_t dimension = 0;
  std::vector<LinearExtension> realizer;
};

namespace detail {

class RealizerSearch {
 public:
  using Clock = std::chrono::steady_clock;

  RealizerSearch(const Poset& p, std::vector<Pair> pairs, Clock::time_point deadline)
      : poset_(p), pairs_(std::move(pairs)), deadline_(deadline) {}

  /// Partition of the critical pairs into at most k reversible classes, or
  /// nullopt. Throws budget_exceeded when the deadline passes.
  std::optional<std::vector<ReversalClass>> partition(std::size_t k) {
    k_ = k;
    classes_.clear();
    if (assign(0)) return classes_;
    return std::nullopt;
  }

 private:
  bool assign(std::size_t i) {
    if ((++nodes_ & 0x3ff) == 0 && Clock::now() > deadline_) throw budget_exceeded("dimension search timed out");
    if (i == pairs_.size()) return true;
    const auto& cp = pairs_[i];
    for (const auto& cls : classes_)
      if (cls.reverses(cp)) return assign(i + 1);
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      ReversalClass saved = classes_[c];
      if (classes_[c].try_reverse(cp)) {
        if (assign(i + 1)) return true;
        classes_[c] = std::move(saved);
      }
    }
    if (classes_.size() < k_) {
      classes_.emplace_back(poset_);
      classes_.back().try_reverse(cp);
      if (assign(i + 1)) return true;
      classes_.pop_back();
    }
    return false;
  }

  const Poset& poset_;
  std::vector<Pair> pairs_;
  Clock::time_point deadline_;
  std::size_t k_ = 0;
  std::size_t nodes_ = 0;
  std::vector<ReversalClass> classes_;
};

}  // namespace detail

/// Exact order dimension by backtracking over the critical pairs: pairs are
/// taken in lexicographic order and placed first-fit into at most k classes,
/// each of which must stay acyclic once its pairs are reversed. k runs from
/// the certified lower bound upwards. The realizer is verified before it is
/// returned. On timeout or when max_k is too small, budget_exceeded carries
/// the bounds known at that point.
inline DimensionResult order_dimension(const Poset& p, const DimensionOptions& opts = {}) {
  const auto deadline = detail::RealizerSearch::Clock::now() + opts.budget;
  const auto bounds = dimension_bounds(p);
  const auto pairs = critical_pairs(p);
  detail::RealizerSearch search(p, pairs, deadline);
  for (std::size_t k = bounds.lower; k <= opts.max_k; ++k) {
    std::optional<std::vector<detail::ReversalClass>> classes;
    try {
      classes = search.partition(k);
    } catch (const budget_exceeded&) {
      throw budget_exceeded("order dimension: time budget exhausted at k = " + std::to_string(k),
                            dimension_bounds_t{k, bounds.upper});
    }
    if (!classes) continue;
    DimensionResult result;
    for (const auto& cls : *classes) result.realizer.push_back(cls.extension(p));
    if (result.realizer.empty()) result.realizer.push_back(greedy_linear_extension(p));
    result.dimension = result.realizer.size();
    if (!(intersect_linear_orders(p.elements(), result.realizer) == p))
      throw std::logic_error("order dimension: realizer does not reproduce the order");
    return result;
  }
  throw budget_exceeded("order dimension exceeds max_k = " + std::to_string(opts.max_k),
                        dimension_bounds_t{std::max(bounds.lower, opts.max_k + 1), bounds.upper});
}

}  // namespace odsk
