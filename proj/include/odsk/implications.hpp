#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "odsk/concepts.hpp"
#include "odsk/context.hpp"

namespace odsk {

/// premise -> conclusion over attribute indices. The stored conclusion never
/// overlaps the premise.
struct Implication {
  Bitset premise;
  Bitset conclusion;

  Implication(Bitset p, const Bitset& c) : premise(std::move(p)), conclusion(c - premise) {}

  friend bool operator==(const Implication&, const Implication&) = default;
};

inline Implication make_implication(const FormalContext& ctx, const std::vector<std::string>& premise,
                                    const std::vector<std::string>& conclusion) {
  return Implication(attribute_set(ctx, premise), attribute_set(ctx, conclusion));
}

/// Every object having all premise attributes has all conclusion attributes.
inline bool holds(const FormalContext& ctx, const Implication& imp) {
  return common_objects(ctx, imp.premise).is_subset_of(common_objects(ctx, imp.conclusion));
}

inline bool holds(const FormalContext& ctx, const std::vector<std::string>& premise,
                  const std::vector<std::string>& conclusion) {
  return holds(ctx, make_implication(ctx, premise, conclusion));
}

/// Smallest superset of `x` closed under the implications (Armstrong closure).
inline Bitset implication_closure(const std::vector<Implication>& base, Bitset x) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& imp : base) {
      if (imp.premise.is_subset_of(x) && !imp.conclusion.is_subset_of(x)) {
        x |= imp.conclusion;
        changed = true;
      }
    }
  }
  return x;
}

inline bool entails(const std::vector<Implication>& base, const Implication& imp) {
  return imp.conclusion.is_subset_of(implication_closure(base, imp.premise));
}

namespace detail {

/// Closure that only fires implications whose premise is a proper subset of
/// the current set. Its closed sets are the intents and pseudo-intents.
inline Bitset pseudo_closure(const std::vector<Implication>& base, Bitset x) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& imp : base) {
      if (imp.premise.is_proper_subset_of(x) && !imp.conclusion.is_subset_of(x)) {
        x |= imp.conclusion;
        changed = true;
      }
    }
  }
  return x;
}

}  // namespace detail

/// Duquenne-Guigues base: one implication P -> P'' \ P per pseudo-intent P,
/// found with NextClosure in lectic order.
inline std::vector<Implication> canonical_base(const FormalContext& ctx,
                                               std::size_t budget = default_concept_budget) {
  const auto n = ctx.attribute_count();
  std::vector<Implication> base;
  Bitset a(n);
  std::size_t visited = 0;
  while (true) {
    if (++visited > budget)
      throw budget_exceeded("canonical base search exceeds budget of " + std::to_string(budget));
    Bitset closed = attribute_closure(ctx, a);
    if (closed != a) base.emplace_back(a, closed);
    if (a.count() == n) break;

    // next closed set of pseudo_closure after `a` in lectic order
    bool found = false;
    for (std::size_t i = n; i-- > 0;) {
      if (a.test(i)) {
        a.reset(i);
        continue;
      }
      Bitset candidate = a;
      candidate.set(i);
      candidate = detail::pseudo_closure(base, candidate);
      if (same_below(a, candidate, i)) {
        a = std::move(candidate);
        found = true;
        break;
      }
    }
    if (!found) break;
  }
  return base;
}

}  // namespace odsk
