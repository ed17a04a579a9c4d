#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "odsk/context.hpp"
#include "odsk/order.hpp"

namespace odsk {

struct FormalConcept {
  Bitset extent;
  Bitset intent;

  friend bool operator==(const FormalConcept&, const FormalConcept&) = default;
};

inline constexpr std::size_t default_concept_budget = 1'000'000;

/// All concepts of a context, sorted by lectic order of their intents.
/// Index 0 is therefore the top concept (smallest intent) and the last index
/// the bottom concept.
class ConceptLattice {
 public:
  ConceptLattice() = default;
  ConceptLattice(std::vector<FormalConcept> concepts, std::size_t objects, std::size_t attributes)
      : concepts_(std::move(concepts)), objects_(objects), attributes_(attributes) {}

  std::size_t size() const { return concepts_.size(); }
  const FormalConcept& operator[](std::size_t i) const { return concepts_[i]; }
  const std::vector<FormalConcept>& concepts() const { return concepts_; }
  auto begin() const { return concepts_.begin(); }
  auto end() const { return concepts_.end(); }

  /// Subconcept order: extent containment.
  bool leq(std::size_t a, std::size_t b) const {
    return concepts_[a].extent.is_subset_of(concepts_[b].extent);
  }

  std::size_t top() const {
    return index_of_largest([](const FormalConcept& c) { return c.extent.count(); });
  }
  std::size_t bottom() const {
    return index_of_largest([](const FormalConcept& c) { return c.intent.count(); });
  }

  /// Concept whose extent equals `extent`, if any.
  std::optional<std::size_t> find_extent(const Bitset& extent) const {
    for (std::size_t i = 0; i < size(); ++i)
      if (concepts_[i].extent == extent) return i;
    return std::nullopt;
  }

  std::size_t object_count() const { return objects_; }
  std::size_t attribute_count() const { return attributes_; }

  /// Materialized containment order, elements named c0, c1, ...
  Poset order() const {
    std::vector<std::string> names;
    names.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) names.push_back("c" + std::to_string(i));
    Relation r(std::move(names));
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = 0; b < size(); ++b)
        if (leq(a, b)) r.add(a, b);
    return Poset::from_order(std::move(r));
  }

 private:
  template <typename Key>
  std::size_t index_of_largest(Key key) const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < size(); ++i)
      if (key(concepts_[i]) > key(concepts_[best])) best = i;
    return best;
  }

  std::vector<FormalConcept> concepts_;
  std::size_t objects_ = 0;
  std::size_t attributes_ = 0;
};

namespace detail {

/// Close-by-One over the attribute side of `ctx`. Emits (extent, intent).
class CloseByOne {
 public:
  CloseByOne(const FormalContext& ctx, std::size_t budget) : ctx_(ctx), budget_(budget) {}

  std::vector<FormalConcept> run() {
    const Bitset extent = ctx_.all_objects();
    const Bitset intent = common_attributes(ctx_, extent);
    descend(extent, intent, 0);
    return std::move(out_);
  }

 private:
  void descend(const Bitset& extent, const Bitset& intent, std::size_t from) {
    if (out_.size() >= budget_)
      throw budget_exceeded("concept count exceeds budget of " + std::to_string(budget_));
    out_.push_back({extent, intent});
    for (std::size_t j = from; j < ctx_.attribute_count(); ++j) {
      if (intent.test(j)) continue;
      Bitset next_extent = extent & ctx_.column(j);
      Bitset next_intent = common_attributes(ctx_, next_extent);
      // canonicity: closing must not add any attribute below j
      if (same_below(intent, next_intent, j)) descend(next_extent, next_intent, j + 1);
    }
  }

  const FormalContext& ctx_;
  std::size_t budget_;
  std::vector<FormalConcept> out_;
};

}  // namespace detail

/// Enumerates all formal concepts with Close-by-One. The search runs over
/// the smaller side (the context is transposed when it has more attributes
/// than objects); the result is always sorted lectically by intent.
inline ConceptLattice concepts(const FormalContext& ctx, std::size_t budget = default_concept_budget) {
  std::vector<FormalConcept> found;
  if (ctx.attribute_count() <= ctx.object_count()) {
    found = detail::CloseByOne(ctx, budget).run();
  } else {
    const auto t = ctx.transposed();
    for (auto& c : detail::CloseByOne(t, budget).run()) found.push_back({std::move(c.intent), std::move(c.extent)});
  }
  std::sort(found.begin(), found.end(),
            [](const FormalConcept& a, const FormalConcept& b) { return lectic_less(a.intent, b.intent); });
  return ConceptLattice(std::move(found), ctx.object_count(), ctx.attribute_count());
}

/// Object concept index per object: the concept generated by {g}''.
inline std::vector<std::size_t> object_concepts(const FormalContext& ctx, const ConceptLattice& lattice) {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    Bitset single(ctx.object_count());
    single.set(g);
    out.push_back(*lattice.find_extent(object_closure(ctx, single)));
  }
  return out;
}

/// Attribute concept index per attribute: the concept with extent {m}'.
inline std::vector<std::size_t> attribute_concepts(const FormalContext& ctx, const ConceptLattice& lattice) {
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m < ctx.attribute_count(); ++m) out.push_back(*lattice.find_extent(ctx.column(m)));
  return out;
}

}  // namespace odsk
