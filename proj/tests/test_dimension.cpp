#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace odsk;

namespace {

Poset cube() {
  std::vector<std::string> names;
  for (int m = 0; m < 8; ++m) names.push_back("s" + std::to_string(m));
  Relation r(names);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      if ((a & b) == a) r.add(a, b);
  return Poset::from_order(r);
}

// a_i < b_j for i != j
Poset standard_example(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) names.push_back("b" + std::to_string(i));
  Relation r(names);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) r.add(i, n + j);
  return close_relation(r);
}

void expect_realizer(const Poset& p, const DimensionResult& r) {
  EXPECT_EQ(r.realizer.size(), r.dimension);
  for (const auto& l : r.realizer) EXPECT_TRUE(is_linear_extension(p, l));
  EXPECT_EQ(intersect_linear_orders(p.elements(), r.realizer), p);
}

Poset bundesliga() {
  const auto t = io::read_table_csv(oracle::data_path("bundesliga.csv"));
  const auto cfg = parse_scaling_config(io::read_file(oracle::data_path("bundesliga_scaling.json")));
  return product_order(ordinal_structure(t, cfg)).poset;
}

}  // namespace

TEST(CriticalPairs, Basics) {
  EXPECT_TRUE(critical_pairs(Poset::chain({"a", "b", "c"})).empty());
  EXPECT_EQ(critical_pairs(Poset::antichain({"a", "b"})), (std::vector<Pair>{{0, 1}, {1, 0}}));
  // in S_n the critical pairs are exactly (a_i, b_i)
  const auto s3 = standard_example(3);
  EXPECT_EQ(critical_pairs(s3), (std::vector<Pair>{{0, 3}, {1, 4}, {2, 5}}));
}

TEST(CriticalPairs, MatchDefinitionOnRandomPosets) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    const auto p = oracle::random_poset(rng, 2 + t % 7, 0.35);
    std::vector<Pair> expected;
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b) {
        if (a == b || !p.incomparable(a, b)) continue;
        bool ok = true;
        for (std::size_t z = 0; z < p.size(); ++z) {
          if (p.lt(z, a) && !p.lt(z, b)) ok = false;
          if (p.lt(b, z) && !p.lt(a, z)) ok = false;
        }
        if (ok) expected.emplace_back(a, b);
      }
    EXPECT_EQ(critical_pairs(p), expected);
  }
}

TEST(Dimension, Chain) {
  const auto p = Poset::chain({"a", "b", "c", "d"});
  const auto r = order_dimension(p);
  EXPECT_EQ(r.dimension, 1u);
  expect_realizer(p, r);
}

TEST(Dimension, Antichains) {
  for (std::size_t n = 2; n <= 5; ++n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    const auto p = Poset::antichain(names);
    const auto r = order_dimension(p);
    EXPECT_EQ(r.dimension, 2u);
    expect_realizer(p, r);
    EXPECT_FALSE(oracle::realizable_with(oracle::leq_matrix(p), 1));
  }
}

TEST(Dimension, BooleanCubeIsThree) {
  const auto p = cube();
  const auto r = order_dimension(p);
  EXPECT_EQ(r.dimension, 3u);
  expect_realizer(p, r);
}

TEST(Dimension, StandardExamples) {
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto p = standard_example(n);
    const auto r = order_dimension(p);
    EXPECT_EQ(r.dimension, n);
    expect_realizer(p, r);
  }
  EXPECT_FALSE(oracle::realizable_with(oracle::leq_matrix(standard_example(3)), 2));
}

TEST(Dimension, MatchesExhaustiveSearchOnRandomPosets) {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 120; ++t) {
    const auto p = oracle::random_poset(rng, 2 + t % 6, 0.2 + 0.1 * (t % 4));
    const auto r = order_dimension(p);
    expect_realizer(p, r);
    const auto leq = oracle::leq_matrix(p);
    // tuples of k extensions grow fast; keep the exhaustive side small
    if (p.size() <= 5 || r.dimension <= 2) {
      EXPECT_TRUE(oracle::realizable_with(leq, r.dimension));
    }
    if (r.dimension > 1 && (p.size() <= 5 || r.dimension <= 3)) {
      EXPECT_FALSE(oracle::realizable_with(leq, r.dimension - 1));
    }
  }
}

TEST(Dimension, BoundsBracketTheValue) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 100; ++t) {
    const auto p = oracle::random_poset(rng, 1 + t % 10, 0.3);
    const auto b = dimension_bounds(p);
    const auto d = order_dimension(p).dimension;
    EXPECT_LE(b.lower, d);
    EXPECT_GE(b.upper, d);
  }
  const auto b = dimension_bounds(standard_example(3));
  EXPECT_EQ(b.lower, 3u);
}

TEST(Dimension, MaxKTooSmall) {
  try {
    order_dimension(cube(), DimensionOptions{2});
    FAIL() << "expected budget_exceeded";
  } catch (const budget_exceeded& e) {
    ASSERT_TRUE(e.bounds().has_value());
    EXPECT_EQ(e.bounds()->lower, 3u);
  }
}

TEST(Dimension, BundesligaRealizerCertificate) {
  const auto p = bundesliga();
  EXPECT_EQ(p.size(), 18u);
  EXPECT_EQ(critical_pairs(p).size(), 24u);
  const auto b = dimension_bounds(p);
  EXPECT_EQ(b.lower, 2u);
  EXPECT_EQ(b.upper, 3u);
  const auto r = order_dimension(p);
  expect_realizer(p, r);
  // the two extensions intersect to the domination order, which is a
  // certificate for dimension <= 2; it is not a chain, so >= 2
  EXPECT_EQ(r.dimension, 2u);
  EXPECT_FALSE(p.is_chain());
}
