#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace odsk;

namespace {

ManyValuedTable bundesliga() { return io::read_table_csv(oracle::data_path("bundesliga.csv")); }

ScalingConfig bundesliga_config() {
  return parse_scaling_config(io::read_file(oracle::data_path("bundesliga_scaling.json")));
}

}  // namespace

TEST(StandardScale, Nominal2IsIdentity) {
  const auto s = standard_scale(ScaleKind::nominal, 2);
  EXPECT_TRUE(s.incident(0, 0));
  EXPECT_TRUE(s.incident(1, 1));
  EXPECT_FALSE(s.incident(0, 1));
  EXPECT_FALSE(s.incident(1, 0));
}

TEST(StandardScale, Contranominal3IsBoolean) {
  const auto s = standard_scale(ScaleKind::contranominal, 3);
  EXPECT_EQ(concepts(s).size(), oracle::all_concepts(s).size());
  EXPECT_EQ(concepts(s).size(), 8u);
}

TEST(StandardScale, OrdinalIsChainOfOracleSize) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto s = standard_scale(ScaleKind::ordinal, n);
    const auto l = concepts(s);
    EXPECT_EQ(l.size(), oracle::all_concepts(s).size());
    EXPECT_TRUE(l.order().is_chain());
  }
  // staircase i >= j: every row holds attribute 0, so there is no concept
  // with an empty intent and n values give n concepts
  EXPECT_EQ(concepts(standard_scale(ScaleKind::ordinal, 3)).size(), 3u);
}

TEST(StandardScale, Errors) {
  EXPECT_THROW(standard_scale(ScaleKind::dichotomic, 3), validation_error);
  EXPECT_THROW(standard_scale(ScaleKind::nominal, 0), validation_error);
  EXPECT_THROW(parse_scale_kind("biordinal"), validation_error);
  EXPECT_EQ(parse_scale_kind("linear"), ScaleKind::ordinal);
}

TEST(ApplyScaling, BundesligaExtentOrderIsDomination) {
  const auto t = bundesliga();
  const auto cfg = bundesliga_config();
  const auto ctx = apply_scaling(t, cfg);
  const auto dom = product_order(ordinal_structure(t, cfg)).poset;
  ASSERT_EQ(dom.size(), t.objects.size());
  // g <= h in the domination order iff h has every attribute of g
  for (std::size_t g = 0; g < t.objects.size(); ++g)
    for (std::size_t h = 0; h < t.objects.size(); ++h)
      EXPECT_EQ(ctx.row(g).is_subset_of(ctx.row(h)), dom.leq(dom.index(t.objects[g]), dom.index(t.objects[h])))
          << t.objects[g] << " / " << t.objects[h];
}

TEST(ApplyScaling, NominalColumn) {
  ManyValuedTable t{{"a", "b", "c", "d"}, {"colour"}, {{"red"}, {"blue"}, {"red"}, {"green"}}};
  const auto ctx = apply_scaling(t, {{"colour", ScaleSpec{ScaleKind::nominal}}});
  EXPECT_EQ(ctx.attribute_count(), 3u);
  for (std::size_t g = 0; g < 4; ++g) EXPECT_EQ(ctx.row(g).count(), 1u);
  EXPECT_EQ(ctx.attribute(0), "colour:=:blue");
}

TEST(ApplyScaling, EmptyTable) {
  const auto ctx = apply_scaling(ManyValuedTable{}, {});
  EXPECT_EQ(ctx.object_count(), 0u);
  EXPECT_EQ(ctx.attribute_count(), 0u);
}

TEST(ApplyScaling, OrdinalDirections) {
  ManyValuedTable t{{"a", "b", "c"}, {"x"}, {{"1"}, {"3"}, {"2"}}};
  const auto up = apply_scaling(t, {{"x", ScaleSpec{ScaleKind::ordinal, Direction::ascending}}});
  EXPECT_EQ(up.attributes(), (std::vector<std::string>{"x:>=:2", "x:>=:3"}));
  EXPECT_EQ(up.row(1).count(), 2u);
  const auto down = apply_scaling(t, {{"x", ScaleSpec{ScaleKind::ordinal, Direction::descending}}});
  EXPECT_EQ(down.attributes(), (std::vector<std::string>{"x:<=:2", "x:<=:1"}));
  EXPECT_EQ(down.row(0).count(), 2u);
}

TEST(ApplyScaling, ExplicitValueOrderAndErrors) {
  ManyValuedTable t{{"a", "b"}, {"size"}, {{"small"}, {"large"}}};
  EXPECT_THROW(apply_scaling(t, {{"size", ScaleSpec{ScaleKind::ordinal}}}), validation_error);
  const auto ctx = apply_scaling(
      t, {{"size", ScaleSpec{ScaleKind::ordinal, Direction::ascending, std::vector<std::string>{"small", "large"}}}});
  EXPECT_TRUE(ctx.incident(1, 0));
  EXPECT_FALSE(ctx.incident(0, 0));
  EXPECT_THROW(apply_scaling(t, {{"size", ScaleSpec{ScaleKind::ordinal, Direction::ascending,
                                                     std::vector<std::string>{"small"}}}}),
               validation_error);
  EXPECT_THROW(apply_scaling(t, {}), validation_error);
  EXPECT_THROW(apply_scaling(t, {{"size", ScaleSpec{ScaleKind::nominal}}, {"other", ScaleSpec{ScaleKind::nominal}}}),
               validation_error);
}

TEST(ApplyScaling, Dichotomic) {
  ManyValuedTable t{{"a", "b", "c"}, {"y"}, {{"yes"}, {"no"}, {"maybe"}}};
  EXPECT_THROW(apply_scaling(t, {{"y", ScaleSpec{ScaleKind::dichotomic}}}), validation_error);
}

TEST(ScalingConfig, ParsesAndRejects) {
  const auto cfg = bundesliga_config();
  EXPECT_EQ(cfg.at("L").direction, Direction::descending);
  EXPECT_EQ(cfg.at("Pos").kind, ScaleKind::ignore);
  EXPECT_THROW(parse_scaling_config("[1]"), parse_error);
  EXPECT_THROW(parse_scaling_config("{\"a\": {}}"), parse_error);
  EXPECT_THROW(parse_scaling_config("{\"a\": {\"kind\": \"ordinal\", \"direction\": \"up\"}}"), parse_error);
  EXPECT_THROW(parse_scaling_config("{"), parse_error);
}

TEST(TableCsv, ParsesFixtureAndRejectsRaggedRows) {
  const auto t = bundesliga();
  EXPECT_EQ(t.objects.size(), 18u);
  EXPECT_EQ(t.columns.size(), 8u);
  EXPECT_EQ(t.objects[0], "FC Bayern München");
  EXPECT_THROW(io::parse_table_csv("name,a\nx,1,2\n"), parse_error);
  EXPECT_THROW(io::parse_table_csv("name,a\nx,1\nx,2\n"), validation_error);
}
