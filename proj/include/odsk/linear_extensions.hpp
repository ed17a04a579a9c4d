#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "odsk/order.hpp"

namespace odsk {

/// Total order on all elements of a poset, listed bottom first.
struct LinearExtension {
  std::vector<std::size_t> order;

  std::size_t size() const { return order.size(); }

  /// rank()[element] = position of the element in `order`.
  std::vector<std::size_t> rank() const {
    std::vector<std::size_t> r(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) r[order[k]] = k;
    return r;
  }

  friend bool operator==(const LinearExtension&, const LinearExtension&) = default;
  friend auto operator<=>(const LinearExtension&, const LinearExtension&) = default;
};

inline constexpr std::size_t default_extension_budget = 20;

/// True iff `o` is a permutation of the poset's elements that contains <=.
inline bool is_linear_extension(const Poset& p, const LinearExtension& o) {
  if (o.size() != p.size()) return false;
  std::vector<bool> seen(p.size(), false);
  for (auto e : o.order) {
    if (e >= p.size() || seen[e]) return false;
    seen[e] = true;
  }
  const auto rank = o.rank();
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.lt(a, b) && rank[a] > rank[b]) return false;
  return true;
}

/// Topological sort that always takes the minimal element whose name is
/// smallest among the available ones. `extra` adds constraints (a before b)
/// on top of the poset; it must keep the union acyclic.
inline LinearExtension greedy_linear_extension(const Poset& p, const std::vector<Pair>& extra = {}) {
  const auto n = p.size();
  std::vector<std::size_t> pending(n, 0);
  std::vector<std::vector<std::size_t>> succ(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (p.lt(a, b)) {
        succ[a].push_back(b);
        ++pending[b];
      }
  for (const auto& [a, b] : extra) {
    succ[a].push_back(b);
    ++pending[b];
  }
  std::vector<std::size_t> available;
  for (std::size_t i = 0; i < n; ++i)
    if (pending[i] == 0) available.push_back(i);
  auto by_name = [&](std::size_t a, std::size_t b) {
    return p.name(a) != p.name(b) ? p.name(a) < p.name(b) : a < b;
  };
  LinearExtension out;
  while (!available.empty()) {
    auto it = std::min_element(available.begin(), available.end(), by_name);
    const auto next = *it;
    available.erase(it);
    out.order.push_back(next);
    for (auto s : succ[next])
      if (--pending[s] == 0) available.push_back(s);
  }
  if (out.size() != n) throw validation_error("constraints are cyclic; no linear extension exists");
  return out;
}

/// Down-set dynamic programme over all 2^n subsets. ways(D) is the number of
/// linear extensions of the poset restricted to the complement of down-set D.
class LinearExtensionCounter {
 public:
  explicit LinearExtensionCounter(const Poset& p, std::size_t budget = default_extension_budget) : n_(p.size()) {
    if (n_ > budget || n_ > 30)
      throw budget_exceeded("linear extension counting needs " + std::to_string(n_) +
                            " elements, budget is " + std::to_string(budget));
    below_.assign(n_, 0);
    for (std::size_t b = 0; b < n_; ++b)
      for (std::size_t a = 0; a < n_; ++a)
        if (p.lt(a, b)) below_[b] |= std::uint32_t{1} << a;
    const std::uint32_t full = n_ == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n_) - 1);
    ways_.assign(std::size_t{full} + 1, 0);
    ways_[full] = 1;
    for (std::uint64_t m = full; m-- > 0;) {
      const auto mask = static_cast<std::uint32_t>(m);
      std::uint64_t total = 0;
      for (std::size_t x = 0; x < n_; ++x) {
        const auto bit = std::uint32_t{1} << x;
        if (!(mask & bit) && (below_[x] & ~mask) == 0) total += ways_[mask | bit];
      }
      ways_[mask] = total;
    }
  }

  std::uint64_t count() const { return ways_[0]; }

  /// Uniform sample: each step picks an available minimal element with
  /// probability proportional to the extensions that continue from it.
  template <typename Rng>
  LinearExtension sample(Rng& rng) const {
    LinearExtension out;
    std::uint32_t mask = 0;
    for (std::size_t step = 0; step < n_; ++step) {
      std::uniform_int_distribution<std::uint64_t> dist(0, ways_[mask] - 1);
      auto r = dist(rng);
      for (std::size_t x = 0; x < n_; ++x) {
        const auto bit = std::uint32_t{1} << x;
        if ((mask & bit) || (below_[x] & ~mask) != 0) continue;
        const auto w = ways_[mask | bit];
        if (r < w) {
          out.order.push_back(x);
          mask |= bit;
          break;
        }
        r -= w;
      }
    }
    return out;
  }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> below_;
  std::vector<std::uint64_t> ways_;
};

inline std::uint64_t count_linear_extensions(const Poset& p, std::size_t budget = default_extension_budget) {
  return LinearExtensionCounter(p, budget).count();
}

struct ExactSampling {
  std::size_t budget = default_extension_budget;
};

/// Adjacent-transposition chain started from the greedy extension.
/// steps == 0 selects the default of 50 * n^3.
struct McmcSampling {
  std::size_t steps = 0;
};

using SamplingMethod = std::variant<ExactSampling, McmcSampling>;

inline std::size_t default_mcmc_steps(std::size_t n) { return 50 * n * n * n; }

template <typename Rng>
LinearExtension mcmc_linear_extension(const Poset& p, Rng& rng, std::size_t steps) {
  auto ext = greedy_linear_extension(p);
  const auto n = p.size();
  if (n < 2) return ext;
  std::uniform_int_distribution<std::size_t> pos(0, n - 2);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t s = 0; s < steps; ++s) {
    const auto i = pos(rng);
    if (!coin(rng)) continue;
    auto& o = ext.order;
    if (!p.leq(o[i], o[i + 1])) std::swap(o[i], o[i + 1]);
  }
  return ext;
}

inline LinearExtension sample_linear_extension(const Poset& p, std::uint64_t seed,
                                               const SamplingMethod& method = ExactSampling{}) {
  std::mt19937_64 rng(seed);
  if (const auto* m = std::get_if<McmcSampling>(&method)) {
    return mcmc_linear_extension(p, rng, m->steps == 0 ? default_mcmc_steps(p.size()) : m->steps);
  }
  return LinearExtensionCounter(p, std::get<ExactSampling>(method).budget).sample(rng);
}

/// Intersection of linear orders over the poset-less element list `names`:
/// a <= b iff a precedes-or-equals b in every order.
inline Poset intersect_linear_orders(const std::vector<std::string>& names,
                                     const std::vector<LinearExtension>& orders) {
  Relation r(names);
  std::vector<std::vector<std::size_t>> ranks;
  for (const auto& o : orders) {
    if (o.size() != names.size()) throw validation_error("linear order does not cover all elements");
    ranks.push_back(o.rank());
  }
  for (std::size_t a = 0; a < names.size(); ++a)
    for (std::size_t b = 0; b < names.size(); ++b)
      if (std::all_of(ranks.begin(), ranks.end(), [&](const auto& rk) { return rk[a] <= rk[b]; })) r.add(a, b);
  return Poset::from_order(std::move(r));
}

}  // namespace odsk
