#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "odsk/bitset.hpp"
#include "odsk/error.hpp"

namespace odsk {

using Pair = std::pair<std::size_t, std::size_t>;

/// A finite binary relation over named elements. Row i holds the set of j
/// with (i, j) in the relation.
class Relation {
 public:
  Relation() = default;

  explicit Relation(std::vector<std::string> elements) : names_(std::move(elements)) {
    rows_.assign(names_.size(), Bitset(names_.size()));
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!index_.emplace(names_[i], i).second)
        throw validation_error("duplicate element name: " + names_[i]);
    }
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& elements() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  std::optional<std::size_t> index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index(std::string_view name) const {
    if (auto i = index_of(name)) return *i;
    throw validation_error("unknown element: " + std::string(name));
  }

  void add(std::size_t i, std::size_t j) { rows_.at(i).set(j); }
  void add(const Pair& p) { add(p.first, p.second); }
  bool contains(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
  const Bitset& row(std::size_t i) const { return rows_[i]; }
  Bitset& row(std::size_t i) { return rows_[i]; }

  std::size_t pair_count() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.count();
    return n;
  }

  std::vector<Pair> pairs() const {
    std::vector<Pair> out;
    for (std::size_t i = 0; i < size(); ++i)
      for_each_bit(rows_[i], [&](std::size_t j) { out.emplace_back(i, j); });
    return out;
  }

  bool is_reflexive() const {
    for (std::size_t i = 0; i < size(); ++i)
      if (!contains(i, i)) return false;
    return true;
  }

  bool is_transitive() const {
    for (std::size_t i = 0; i < size(); ++i) {
      bool ok = true;
      for_each_bit(rows_[i], [&](std::size_t j) { ok = ok && rows_[j].is_subset_of(rows_[i]); });
      if (!ok) return false;
    }
    return true;
  }

  bool is_antisymmetric() const {
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j)
        if (contains(i, j) && contains(j, i)) return false;
    return true;
  }

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.names_ == b.names_ && a.rows_ == b.rows_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Bitset> rows_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// Reflexive-transitive closure (Warshall over bitset rows).
inline Relation reflexive_transitive_closure(Relation r) {
  const auto n = r.size();
  for (std::size_t i = 0; i < n; ++i) r.add(i, i);
  for (std::size_t k = 0; k < n; ++k) {
    const Bitset via = r.row(k);
    for (std::size_t i = 0; i < n; ++i)
      if (r.contains(i, k)) r.row(i) |= via;
  }
  return r;
}

/// Reflexive and transitive relation; ties (mutually related elements) allowed.
class QuasiOrder {
 public:
  QuasiOrder() = default;

  static QuasiOrder closure_of(const Relation& r) {
    QuasiOrder q;
    q.rel_ = reflexive_transitive_closure(r);
    return q;
  }

  /// Linear quasi-order induced by numeric scores. With `higher_is_greater`
  /// i <= j iff score(i) <= score(j); otherwise the reverse.
  static QuasiOrder from_scores(std::vector<std::string> elements, const std::vector<double>& scores,
                                bool higher_is_greater = true) {
    if (scores.size() != elements.size())
      throw validation_error("score count does not match element count");
    Relation r(std::move(elements));
    for (std::size_t i = 0; i < scores.size(); ++i)
      for (std::size_t j = 0; j < scores.size(); ++j)
        if (higher_is_greater ? scores[i] <= scores[j] : scores[i] >= scores[j]) r.add(i, j);
    QuasiOrder q;
    q.rel_ = std::move(r);
    return q;
  }

  std::size_t size() const { return rel_.size(); }
  const std::vector<std::string>& elements() const { return rel_.elements(); }
  const std::string& name(std::size_t i) const { return rel_.name(i); }
  bool leq(std::size_t i, std::size_t j) const { return rel_.contains(i, j); }
  bool lt(std::size_t i, std::size_t j) const { return leq(i, j) && !leq(j, i); }
  bool equivalent(std::size_t i, std::size_t j) const { return leq(i, j) && leq(j, i); }
  const Relation& relation() const { return rel_; }

 private:
  Relation rel_;
};

/// Finite partially ordered set; stores the full (dense) order relation.
/// up(i) is the principal filter of i, down(i) the principal ideal.
class Poset {
 public:
  Poset() = default;

  /// `leq` must already be reflexive, transitive and antisymmetric.
  static Poset from_order(Relation leq) {
    if (!leq.is_reflexive() || !leq.is_transitive())
      throw validation_error("order relation is not reflexive and transitive");
    if (!leq.is_antisymmetric()) throw validation_error("order relation is not antisymmetric");
    return Poset(std::move(leq));
  }

  /// Antichain over the given names.
  static Poset antichain(std::vector<std::string> names) {
    Relation r(std::move(names));
    for (std::size_t i = 0; i < r.size(); ++i) r.add(i, i);
    return Poset(std::move(r));
  }

  /// Chain in the given order, first element at the bottom.
  static Poset chain(std::vector<std::string> names) {
    Relation r(std::move(names));
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = i; j < r.size(); ++j) r.add(i, j);
    return Poset(std::move(r));
  }

  std::size_t size() const { return leq_.size(); }
  bool empty() const { return size() == 0; }
  const std::vector<std::string>& elements() const { return leq_.elements(); }
  const std::string& name(std::size_t i) const { return leq_.name(i); }
  std::optional<std::size_t> index_of(std::string_view n) const { return leq_.index_of(n); }
  std::size_t index(std::string_view n) const { return leq_.index(n); }

  bool leq(std::size_t i, std::size_t j) const { return leq_.contains(i, j); }
  bool lt(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }
  bool comparable(std::size_t i, std::size_t j) const { return leq(i, j) || leq(j, i); }
  bool incomparable(std::size_t i, std::size_t j) const { return !comparable(i, j); }

  const Bitset& up(std::size_t i) const { return leq_.row(i); }
  const Bitset& down(std::size_t i) const { return down_[i]; }
  const Relation& relation() const { return leq_; }

  bool is_chain() const {
    for (std::size_t i = 0; i < size(); ++i)
      if ((up(i) | down(i)).count() != size()) return false;
    return true;
  }

  friend bool operator==(const Poset& a, const Poset& b) { return a.leq_ == b.leq_; }

 private:
  explicit Poset(Relation leq) : leq_(std::move(leq)) {
    down_.assign(size(), Bitset(size()));
    for (std::size_t i = 0; i < size(); ++i)
      for_each_bit(leq_.row(i), [&](std::size_t j) { down_[j].set(i); });
  }

  Relation leq_;
  std::vector<Bitset> down_;
};

/// Strongly connected classes (mutual reachability) of a closed relation,
/// ordered by smallest member.
inline std::vector<std::vector<std::size_t>> equivalence_classes(const Relation& closed) {
  const auto n = closed.size();
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t j = i; j < n; ++j) {
      if (j == i || (closed.contains(i, j) && closed.contains(j, i))) {
        cls.push_back(j);
        seen[j] = true;
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

/// Reflexive-transitive closure of `rel` as a poset. Throws
/// antisymmetry_violation listing the nontrivial equivalence classes.
inline Poset close_relation(const Relation& rel) {
  auto closed = reflexive_transitive_closure(rel);
  std::vector<std::vector<std::string>> bad;
  for (const auto& cls : equivalence_classes(closed)) {
    if (cls.size() < 2) continue;
    std::vector<std::string> names;
    for (auto i : cls) names.push_back(closed.name(i));
    bad.push_back(std::move(names));
  }
  if (!bad.empty()) throw antisymmetry_violation(std::move(bad));
  return Poset::from_order(std::move(closed));
}

/// A poset obtained by merging tied elements; class_of maps each original
/// element to its class index.
struct Quotient {
  Poset poset;
  std::vector<std::size_t> class_of;
  std::vector<std::vector<std::size_t>> classes;
};

inline std::string join_names(const std::vector<std::string>& names, const std::vector<std::size_t>& idx,
                              std::string_view sep = "+") {
  std::string out;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) out += sep;
    out += names[idx[k]];
  }
  return out;
}

inline Quotient quotient(const QuasiOrder& q) {
  const auto& rel = q.relation();
  Quotient out;
  out.classes = equivalence_classes(rel);
  out.class_of.assign(q.size(), 0);
  std::vector<std::string> names;
  for (std::size_t c = 0; c < out.classes.size(); ++c) {
    for (auto i : out.classes[c]) out.class_of[i] = c;
    names.push_back(join_names(q.elements(), out.classes[c]));
  }
  Relation r(std::move(names));
  for (std::size_t a = 0; a < out.classes.size(); ++a)
    for (std::size_t b = 0; b < out.classes.size(); ++b)
      if (rel.contains(out.classes[a].front(), out.classes[b].front())) r.add(a, b);
  out.poset = Poset::from_order(std::move(r));
  return out;
}

/// Neighboring relation: pairs a < b with nothing strictly between.
inline std::vector<Pair> covering_relation(const Poset& p) {
  std::vector<Pair> out;
  const auto n = p.size();
  for (std::size_t a = 0; a < n; ++a) {
    Bitset above = p.up(a);
    above.reset(a);
    for_each_bit(above, [&](std::size_t b) {
      Bitset between = above & p.down(b);
      between.reset(b);
      if (between.none()) out.emplace_back(a, b);
    });
  }
  return out;
}

struct NamedOrder {
  std::string name;
  QuasiOrder order;
};

/// A set of objects carrying several quasi-orders over the same elements.
class OrdinalStructure {
 public:
  OrdinalStructure(std::vector<std::string> elements, std::vector<NamedOrder> orders)
      : elements_(std::move(elements)), orders_(std::move(orders)) {
    if (orders_.empty()) throw validation_error("ordinal structure needs at least one order");
    for (const auto& o : orders_)
      if (o.order.elements() != elements_)
        throw validation_error("order '" + o.name + "' is over a different element list");
  }

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::vector<NamedOrder>& orders() const { return orders_; }

  /// p is dominated by q: p <= q in every component order.
  bool dominated(std::size_t p, std::size_t q) const {
    return std::all_of(orders_.begin(), orders_.end(),
                       [&](const NamedOrder& o) { return o.order.leq(p, q); });
  }

 private:
  std::vector<std::string> elements_;
  std::vector<NamedOrder> orders_;
};

inline QuasiOrder domination_quasi_order(const OrdinalStructure& s) {
  Relation r(s.elements());
  for (std::size_t p = 0; p < s.size(); ++p)
    for (std::size_t q = 0; q < s.size(); ++q)
      if (s.dominated(p, q)) r.add(p, q);
  return QuasiOrder::closure_of(r);
}

/// Direct product of the component orders, ties merged.
inline Quotient product_order(const OrdinalStructure& s) { return quotient(domination_quasi_order(s)); }

/// Product order without merging ties: tied elements become incomparable.
inline Poset strict_domination_order(const OrdinalStructure& s) {
  const auto q = domination_quasi_order(s);
  Relation r(s.elements());
  for (std::size_t p = 0; p < s.size(); ++p)
    for (std::size_t o = 0; o < s.size(); ++o)
      if (p == o || q.lt(p, o)) r.add(p, o);
  return Poset::from_order(std::move(r));
}

/// Elements that no other element strictly dominates.
inline std::vector<std::size_t> pareto_maxima(const OrdinalStructure& s) {
  const auto q = domination_quasi_order(s);
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < s.size(); ++p) {
    bool dominated = false;
    for (std::size_t o = 0; o < s.size() && !dominated; ++o) dominated = q.lt(p, o);
    if (!dominated) out.push_back(p);
  }
  return out;
}

inline std::vector<std::size_t> maximal_elements(const Poset& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.up(i).count() == 1) out.push_back(i);
  return out;
}

inline std::vector<std::size_t> minimal_elements(const Poset& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.down(i).count() == 1) out.push_back(i);
  return out;
}

/// Up-set generated by `s`.
inline Bitset order_filter(const Poset& p, const Bitset& s) {
  Bitset out(p.size());
  for_each_bit(s, [&](std::size_t i) { out |= p.up(i); });
  return out;
}

/// Down-set generated by `s`.
inline Bitset order_ideal(const Poset& p, const Bitset& s) {
  Bitset out(p.size());
  for_each_bit(s, [&](std::size_t i) { out |= p.down(i); });
  return out;
}

/// Maximum matching in the bipartite "strictly below" graph (Kuhn). Its
/// size is n minus the minimum number of chains covering the poset.
inline std::vector<std::optional<std::size_t>> chain_cover_matching(const Poset& p) {
  const auto n = p.size();
  std::vector<std::optional<std::size_t>> match_of_upper(n);
  std::vector<char> visited;
  auto augment = [&](auto&& self, std::size_t a) -> bool {
    for (std::size_t b = 0; b < n; ++b) {
      if (!p.lt(a, b) || visited[b]) continue;
      visited[b] = 1;
      if (!match_of_upper[b] || self(self, *match_of_upper[b])) {
        match_of_upper[b] = a;
        return true;
      }
    }
    return false;
  };
  for (std::size_t a = 0; a < n; ++a) {
    visited.assign(n, 0);
    augment(augment, a);
  }
  return match_of_upper;
}

/// Longest-chain level of each element (minimal elements are level 0).
inline std::vector<std::size_t> height_levels(const Poset& p) {
  const auto n = p.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  // |down(i)| is a linear extension key.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return p.down(a).count() < p.down(b).count(); });
  std::vector<std::size_t> level(n, 0);
  for (auto b : order)
    for_each_bit(p.down(b), [&](std::size_t a) {
      if (a != b) level[b] = std::max(level[b], level[a] + 1);
    });
  return level;
}

struct WidthHeight {
  std::size_t width = 0;
  std::size_t height = 0;
};

inline WidthHeight width_height(const Poset& p) {
  WidthHeight wh;
  const auto matching = chain_cover_matching(p);
  const auto matched = static_cast<std::size_t>(
      std::count_if(matching.begin(), matching.end(), [](const auto& m) { return m.has_value(); }));
  wh.width = p.size() - matched;
  if (!p.empty()) {
    const auto levels = height_levels(p);
    wh.height = *std::max_element(levels.begin(), levels.end()) + 1;
  }
  return wh;
}

}  // namespace odsk
