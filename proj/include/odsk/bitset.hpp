#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace odsk {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

inline Bitset full_bitset(std::size_t n) {
  Bitset b(n);
  b.set();
  return b;
}

template <typename F>
inline void for_each_bit(const Bitset& b, F&& f) {
  for (auto i = b.find_first(); i != Bitset::npos; i = b.find_next(i)) f(i);
}

inline std::vector<std::size_t> to_indices(const Bitset& b) {
  std::vector<std::size_t> out;
  out.reserve(b.count());
  for_each_bit(b, [&](std::size_t i) { out.push_back(i); });
  return out;
}

inline Bitset from_indices(std::size_t n, const std::vector<std::size_t>& idx) {
  Bitset b(n);
  for (auto i : idx) b.set(i);
  return b;
}

/// Lectic order on subsets of {0..n-1}: the smallest index in which the two
/// sets differ decides, and the set containing it is the larger one. The
/// empty set comes first, the full set last.
inline bool lectic_less(const Bitset& a, const Bitset& b) {
  const auto diff = (a ^ b).find_first();
  return diff != Bitset::npos && b.test(diff);
}

/// True iff b agrees with a on all indices below i.
inline bool same_below(const Bitset& a, const Bitset& b, std::size_t i) {
  auto diff = (a ^ b).find_first();
  return diff == Bitset::npos || diff >= i;
}

}  // namespace odsk
