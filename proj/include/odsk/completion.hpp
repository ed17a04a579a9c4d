#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "odsk/concepts.hpp"
#include "odsk/order.hpp"

namespace odsk {

/// Dedekind-MacNeille completion as the concept lattice of (P, P, <=).
/// embedding[x] is the concept ({y : y <= x}, {y : x <= y}); new_nodes lists
/// the concepts that are not such an image.
struct Completion {
  ConceptLattice lattice;
  std::vector<std::size_t> embedding;
  std::vector<std::size_t> new_nodes;
};

inline FormalContext order_context(const Poset& p) {
  FormalContext ctx(p.elements(), p.elements());
  for (std::size_t x = 0; x < p.size(); ++x)
    for_each_bit(p.up(x), [&](std::size_t y) { ctx.set(x, y); });
  return ctx;
}

inline Completion dedekind_macneille(const Poset& p, std::size_t budget = default_concept_budget) {
  Completion c;
  c.lattice = concepts(order_context(p), budget);
  std::vector<bool> is_image(c.lattice.size(), false);
  for (std::size_t x = 0; x < p.size(); ++x) {
    const auto idx = c.lattice.find_extent(p.down(x));
    c.embedding.push_back(*idx);
    is_image[*idx] = true;
  }
  for (std::size_t i = 0; i < c.lattice.size(); ++i)
    if (!is_image[i]) c.new_nodes.push_back(i);
  return c;
}

/// Completion as a poset: embedded nodes keep their element names, new
/// nodes are named "cut:" followed by their extent.
inline Poset completion_order(const Completion& c, const Poset& source) {
  std::vector<std::string> names(c.lattice.size());
  for (std::size_t x = 0; x < c.embedding.size(); ++x) names[c.embedding[x]] = source.name(x);
  for (auto i : c.new_nodes) {
    std::string n = "cut:";
    bool first = true;
    for_each_bit(c.lattice[i].extent, [&](std::size_t y) {
      if (!first) n += ',';
      n += source.name(y);
      first = false;
    });
    names[i] = n;
  }
  Relation r(std::move(names));
  for (std::size_t a = 0; a < c.lattice.size(); ++a)
    for (std::size_t b = 0; b < c.lattice.size(); ++b)
      if (c.lattice.leq(a, b)) r.add(a, b);
  return Poset::from_order(std::move(r));
}

}  // namespace odsk
