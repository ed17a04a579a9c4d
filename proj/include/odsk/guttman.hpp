#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "odsk/context.hpp"

namespace odsk {

/// Integer ranks with (g, m) in I iff s[g] <= e[m]. Objects get ranks 1..k
/// (k = number of distinct rows, largest row first); attributes get the rank
/// of the smallest row still containing them, 0 if no object has them.
struct GuttmanWitness {
  std::vector<int> s;
  std::vector<int> e;
};

struct GuttmanResult {
  bool guttman = false;
  std::optional<GuttmanWitness> witness;
};

/// Ferrers test: rows must be totally ordered by inclusion.
inline GuttmanResult is_guttman(const FormalContext& ctx) {
  std::vector<Bitset> distinct;
  for (std::size_t g = 0; g < ctx.object_count(); ++g)
    if (std::find(distinct.begin(), distinct.end(), ctx.row(g)) == distinct.end()) distinct.push_back(ctx.row(g));
  std::stable_sort(distinct.begin(), distinct.end(),
                   [](const Bitset& a, const Bitset& b) { return a.count() > b.count(); });
  for (std::size_t k = 1; k < distinct.size(); ++k)
    if (!distinct[k].is_subset_of(distinct[k - 1])) return {};

  GuttmanWitness w;
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    auto it = std::find(distinct.begin(), distinct.end(), ctx.row(g));
    w.s.push_back(static_cast<int>(it - distinct.begin()) + 1);
  }
  for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
    int rank = 0;
    for (std::size_t k = 0; k < distinct.size(); ++k)
      if (distinct[k].test(m)) rank = static_cast<int>(k) + 1;
    w.e.push_back(rank);
  }
  return {true, std::move(w)};
}

}  // namespace odsk
