#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace odsk;

TEST(Completion, RandomPosetsGiveLatticeOfCuts) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 500; ++t) {
    const auto p = oracle::random_poset(rng, 1 + t % 8, 0.15 + 0.1 * (t % 6));
    const auto c = dedekind_macneille(p);
    const auto l = oracle::leq_matrix(completion_order(c, p));
    EXPECT_TRUE(oracle::is_lattice(l));
    EXPECT_EQ(c.lattice.size(), oracle::count_cuts(oracle::leq_matrix(p)));
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b) EXPECT_EQ(p.leq(a, b), c.lattice.leq(c.embedding[a], c.embedding[b]));
    EXPECT_EQ(c.new_nodes.size() + p.size(), c.lattice.size());
  }
}

TEST(Completion, TwoAntichainAddsTopAndBottom) {
  const auto p = Poset::antichain({"a", "b"});
  const auto c = dedekind_macneille(p);
  EXPECT_EQ(c.lattice.size(), 4u);
  EXPECT_EQ(c.new_nodes.size(), 2u);
  const auto q = completion_order(c, p);
  EXPECT_TRUE(q.index_of("cut:a,b").has_value());
  EXPECT_TRUE(q.index_of("cut:").has_value());
}

TEST(Completion, ChainIsFixed) {
  const auto p = Poset::chain({"a", "b", "c", "d"});
  const auto c = dedekind_macneille(p);
  EXPECT_TRUE(c.new_nodes.empty());
  const auto q = completion_order(c, p);
  ASSERT_EQ(q.size(), p.size());
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b) EXPECT_EQ(q.leq(q.index(p.name(a)), q.index(p.name(b))), p.leq(a, b));
}

TEST(Completion, ParentsAndChildren) {
  // two children below two parents: one new node between the layers
  Relation r({"c1", "c2", "p1", "p2"});
  for (std::size_t c : {0, 1})
    for (std::size_t q : {2, 3}) r.add(c, q);
  const auto p = close_relation(r);
  const auto c = dedekind_macneille(p);
  EXPECT_EQ(c.lattice.size(), 7u);
  EXPECT_EQ(c.new_nodes.size(), 3u);
  EXPECT_TRUE(oracle::is_lattice(oracle::leq_matrix(completion_order(c, p))));
}

TEST(Completion, EmptyPoset) {
  const auto p = Poset::antichain({});
  const auto c = dedekind_macneille(p);
  EXPECT_EQ(c.lattice.size(), 1u);
}
