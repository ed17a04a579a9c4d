#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

#include "odsk/concepts.hpp"
#include "odsk/context.hpp"

namespace odsk {

/// Set of (object, attribute) cells, one attribute bitset per object.
class IncidenceSet {
 public:
  IncidenceSet() = default;
  IncidenceSet(std::size_t objects, std::size_t attributes) : rows_(objects, Bitset(attributes)) {}

  static IncidenceSet of(const FormalContext& ctx) {
    IncidenceSet s(ctx.object_count(), ctx.attribute_count());
    for (std::size_t g = 0; g < ctx.object_count(); ++g) s.rows_[g] = ctx.row(g);
    return s;
  }

  std::size_t objects() const { return rows_.size(); }
  bool contains(std::size_t g, std::size_t m) const { return rows_[g].test(m); }
  void insert(std::size_t g, std::size_t m) { rows_[g].set(m); }
  const Bitset& row(std::size_t g) const { return rows_[g]; }

  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.count();
    return n;
  }
  bool empty() const { return size() == 0; }

  /// Cells of extent x intent that lie in this set.
  std::size_t overlap(const Bitset& extent, const Bitset& intent) const {
    std::size_t n = 0;
    for_each_bit(extent, [&](std::size_t g) { n += (rows_[g] & intent).count(); });
    return n;
  }

  void erase_tile(const Bitset& extent, const Bitset& intent) {
    for_each_bit(extent, [&](std::size_t g) { rows_[g] -= intent; });
  }
  void insert_tile(const Bitset& extent, const Bitset& intent) {
    for_each_bit(extent, [&](std::size_t g) { rows_[g] |= intent; });
  }

  std::vector<Pair> pairs() const {
    std::vector<Pair> out;
    for (std::size_t g = 0; g < rows_.size(); ++g)
      for_each_bit(rows_[g], [&](std::size_t m) { out.emplace_back(g, m); });
    return out;
  }

  friend IncidenceSet operator-(IncidenceSet a, const IncidenceSet& b) {
    for (std::size_t g = 0; g < a.rows_.size(); ++g) a.rows_[g] -= b.rows_[g];
    return a;
  }
  friend IncidenceSet operator&(IncidenceSet a, const IncidenceSet& b) {
    for (std::size_t g = 0; g < a.rows_.size(); ++g) a.rows_[g] &= b.rows_[g];
    return a;
  }
  friend bool operator==(const IncidenceSet&, const IncidenceSet&) = default;

 private:
  std::vector<Bitset> rows_;
};

struct BooleanFactorization {
  std::vector<FormalConcept> factors;
  IncidenceSet covered;
  IncidenceSet uncovered;
};

/// Greedy Boolean factor selection: repeatedly take the concept whose tile
/// covers the most uncovered incidences (earliest in lectic order on ties)
/// until everything is covered or `k` factors are chosen.
inline BooleanFactorization boolean_greedy(const FormalContext& ctx, std::optional<std::size_t> k = std::nullopt,
                                           std::size_t budget = default_concept_budget) {
  const auto lattice = concepts(ctx, budget);
  BooleanFactorization out;
  out.uncovered = IncidenceSet::of(ctx);
  out.covered = IncidenceSet(ctx.object_count(), ctx.attribute_count());
  while (!out.uncovered.empty() && (!k || out.factors.size() < *k)) {
    std::size_t best = 0, best_gain = 0;
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      const auto gain = out.uncovered.overlap(lattice[i].extent, lattice[i].intent);
      if (gain > best_gain) {
        best = i;
        best_gain = gain;
      }
    }
    const auto& c = lattice[best];
    out.factors.push_back(c);
    out.uncovered.erase_tile(c.extent, c.intent);
    out.covered.insert_tile(c.extent, c.intent);
  }
  return out;
}

/// Chain of concepts listed by increasing extent (decreasing intent).
struct OrdinalFactor {
  std::vector<FormalConcept> chain;

  bool empty() const { return chain.empty(); }
  std::size_t size() const { return chain.size(); }

  IncidenceSet cover(std::size_t objects, std::size_t attributes) const {
    IncidenceSet s(objects, attributes);
    for (const auto& c : chain) s.insert_tile(c.extent, c.intent);
    return s;
  }
};

/// Chain selection score. Larger coverage wins, then fewer members, then
/// the lectically larger member sequence (members compared bottom-up by
/// their lectic position).
struct ChainScore {
  std::size_t coverage = 0;
  std::vector<std::size_t> members;

  bool better_than(const ChainScore& o) const {
    if (coverage != o.coverage) return coverage > o.coverage;
    if (members.size() != o.members.size()) return members.size() < o.members.size();
    return std::lexicographical_compare(o.members.begin(), o.members.end(), members.begin(), members.end());
  }
};

/// Newly covered cells when concept `next` is stacked on top of `prev`
/// in a chain: (extent(next) \ extent(prev)) x intent(next). With no
/// predecessor the whole tile counts.
inline std::size_t chain_step_gain(const ConceptLattice& lattice, const IncidenceSet& uncovered,
                                   std::optional<std::size_t> prev, std::size_t next) {
  const auto& c = lattice[next];
  if (!prev) return uncovered.overlap(c.extent, c.intent);
  return uncovered.overlap(c.extent - lattice[*prev].extent, c.intent);
}

/// Largest ordinal factor w.r.t. the still uncovered incidences. The cover
/// of a chain is the sum of its step gains, so the best chain is a longest
/// path in the concept order; this is solved exactly by dynamic programming
/// over concepts in order of increasing extent.
inline OrdinalFactor largest_ordinal_factor(const ConceptLattice& lattice, const IncidenceSet& uncovered) {
  const auto n = lattice.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return lattice[a].extent.count() < lattice[b].extent.count();
  });
  std::vector<ChainScore> best(n);
  std::optional<std::size_t> winner;
  for (auto v : order) {
    ChainScore here{chain_step_gain(lattice, uncovered, std::nullopt, v), {v}};
    for (auto u : order) {
      if (u == v) break;
      if (!lattice[u].extent.is_proper_subset_of(lattice[v].extent)) continue;
      ChainScore cand = best[u];
      cand.coverage += chain_step_gain(lattice, uncovered, u, v);
      cand.members.push_back(v);
      if (cand.better_than(here)) here = std::move(cand);
    }
    best[v] = std::move(here);
    if (!winner || best[v].better_than(best[*winner])) winner = v;
  }
  OrdinalFactor f;
  if (!winner || best[*winner].coverage == 0) return f;
  for (auto i : best[*winner].members) {
    const auto& c = lattice[i];
    if (c.extent.none() || c.intent.none()) continue;
    f.chain.push_back(c);
  }
  return f;
}

inline OrdinalFactor largest_ordinal_factor(const FormalContext& ctx, const IncidenceSet& uncovered,
                                            std::size_t budget = default_concept_budget) {
  return largest_ordinal_factor(concepts(ctx, budget), uncovered);
}

struct Factorization {
  std::vector<OrdinalFactor> factors;
  IncidenceSet covered;
  IncidenceSet uncovered;
};

/// Up to k successive largest ordinal factors; stops early once every
/// incidence is covered.
inline Factorization ordinal_factorization(const FormalContext& ctx, std::size_t k,
                                           std::size_t budget = default_concept_budget) {
  if (k == 0) throw validation_error("ordinal factorization needs k >= 1");
  const auto lattice = concepts(ctx, budget);
  Factorization fz;
  fz.uncovered = IncidenceSet::of(ctx);
  for (std::size_t i = 0; i < k && !fz.uncovered.empty(); ++i) {
    auto f = largest_ordinal_factor(lattice, fz.uncovered);
    if (f.empty()) break;
    for (const auto& c : f.chain) fz.uncovered.erase_tile(c.extent, c.intent);
    fz.factors.push_back(std::move(f));
  }
  fz.covered = IncidenceSet::of(ctx) - fz.uncovered;
  return fz;
}

/// Per-factor integer coordinates. For a chain of length k, an object sits
/// at k + 1 - (first level whose extent holds it) and an attribute at
/// k + 1 - (last level whose intent holds it); a cell is covered by the
/// factor iff object coordinate >= attribute coordinate.
struct Biplot {
  std::array<std::vector<int>, 2> object_coord;
  std::array<std::vector<int>, 2> attribute_coord;

  bool covered(std::size_t g, std::size_t m) const {
    for (std::size_t f = 0; f < 2; ++f)
      if (object_coord[f][g] >= attribute_coord[f][m]) return true;
    return false;
  }
};

inline Biplot biplot(const Factorization& fz, std::size_t objects, std::size_t attributes) {
  if (fz.factors.size() != 2)
    throw validation_error("biplot needs exactly 2 factors, got " + std::to_string(fz.factors.size()));
  Biplot b;
  for (std::size_t f = 0; f < 2; ++f) {
    const auto& chain = fz.factors[f].chain;
    const int k = static_cast<int>(chain.size());
    for (std::size_t g = 0; g < objects; ++g) {
      int first = k + 1;
      for (int i = k; i >= 1; --i)
        if (chain[i - 1].extent.test(g)) first = i;
      b.object_coord[f].push_back(k + 1 - first);
    }
    for (std::size_t m = 0; m < attributes; ++m) {
      int last = 0;
      for (int i = 1; i <= k; ++i)
        if (chain[i - 1].intent.test(m)) last = i;
      b.attribute_coord[f].push_back(k + 1 - last);
    }
  }
  return b;
}

}  // namespace odsk
