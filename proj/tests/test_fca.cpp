#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace odsk;

namespace {

FormalContext rembrandt() { return io::read_cxt(oracle::data_path("rembrandt.cxt")); }

FormalContext from_rows(const std::vector<std::string>& rows) {
  std::vector<std::string> objs, attrs;
  for (std::size_t i = 0; i < rows.size(); ++i) objs.push_back("g" + std::to_string(i));
  for (std::size_t j = 0; j < (rows.empty() ? 0 : rows[0].size()); ++j) attrs.push_back("m" + std::to_string(j));
  FormalContext ctx(objs, attrs);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      if (rows[i][j] == 'X') ctx.set(i, j);
  return ctx;
}

std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> as_sets(const ConceptLattice& l) {
  std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> out;
  for (const auto& c : l) out.emplace(to_indices(c.extent), to_indices(c.intent));
  return out;
}

bool lattice_is_chain(const ConceptLattice& l) {
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = 0; b < l.size(); ++b)
      if (!l.leq(a, b) && !l.leq(b, a)) return false;
  return true;
}

}  // namespace

TEST(Derive, RembrandtNightwatch) {
  const auto ctx = rembrandt();
  const auto intent = derive(ctx, Side::objects, object_set(ctx, {"Nightwatch"}));
  EXPECT_EQ(intent, attribute_set(ctx, {"Group Portrait", "Canvas"}));
}

TEST(Derive, EmptyObjectSetGivesAllAttributes) {
  const auto ctx = rembrandt();
  EXPECT_EQ(derive(ctx, Side::objects, Bitset(ctx.object_count())), ctx.all_attributes());
}

TEST(Derive, ClosureLaws) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    const auto ctx = oracle::random_context(rng, 6, 5, 0.5);
    for (std::uint32_t m = 0; m < 64; ++m) {
      Bitset s(6, m);
      const auto c = object_closure(ctx, s);
      EXPECT_TRUE(s.is_subset_of(c));
      EXPECT_EQ(object_closure(ctx, c), c);
    }
  }
}

TEST(Concepts, EmptyContextHasOneConcept) {
  const auto l = concepts(FormalContext({}, {}));
  ASSERT_EQ(l.size(), 1u);
  EXPECT_EQ(l[0].extent.size(), 0u);
}

TEST(Concepts, Contranominal3IsBoolean) {
  EXPECT_EQ(concepts(standard_scale(ScaleKind::contranominal, 3)).size(), 8u);
}

TEST(Concepts, RembrandtMatchesSubsetClosureOracle) {
  const auto ctx = rembrandt();
  std::set<std::uint64_t> intents;
  for (std::uint64_t b = 0; b < 32; ++b) intents.insert(oracle::closure_mask(ctx, b));
  EXPECT_EQ(concepts(ctx).size(), intents.size());
  EXPECT_EQ(as_sets(concepts(ctx)), oracle::all_concepts(ctx));
}

TEST(Concepts, RandomContextsMatchOracle) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 150; ++t) {
    // alternate shapes so both the direct and the transposed path run
    const auto ctx = t % 2 ? oracle::random_context(rng, 7, 4, 0.45) : oracle::random_context(rng, 4, 7, 0.45);
    EXPECT_EQ(as_sets(concepts(ctx)), oracle::all_concepts(ctx));
  }
}

TEST(Concepts, SortedLecticallyByIntentWithTopFirst) {
  std::mt19937_64 rng(4);
  const auto ctx = oracle::random_context(rng, 8, 6, 0.5);
  const auto l = concepts(ctx);
  for (std::size_t i = 1; i < l.size(); ++i) EXPECT_TRUE(lectic_less(l[i - 1].intent, l[i].intent));
  EXPECT_EQ(l.top(), 0u);
  EXPECT_EQ(l[l.bottom()].intent, common_attributes(ctx, Bitset(ctx.object_count())));
}

TEST(Concepts, BudgetExceeded) {
  EXPECT_THROW(concepts(standard_scale(ScaleKind::contranominal, 6), 10), budget_exceeded);
}

TEST(Holds, RembrandtImplications) {
  const auto ctx = rembrandt();
  EXPECT_TRUE(holds(ctx, {"≥ 1660"}, {"Canvas"}));
  EXPECT_TRUE(holds(ctx, {"Family Portrait", "Canvas"}, {"≥ 1660"}));
  EXPECT_FALSE(holds(ctx, {"Canvas"}, {"≥ 1660"}));
  EXPECT_TRUE(holds(ctx, {"Oak", "Canvas"}, {"Oak", "Canvas"}));
}

TEST(CanonicalBase, FullContextForcesEverythingFromEmpty) {
  const auto ctx = from_rows({"XXX", "XXX"});
  const auto base = canonical_base(ctx);
  ASSERT_EQ(base.size(), 1u);
  EXPECT_TRUE(base[0].premise.none());
  EXPECT_EQ(base[0].conclusion, ctx.all_attributes());
}

TEST(CanonicalBase, RembrandtEntailsKnownImplications) {
  const auto ctx = rembrandt();
  const auto base = canonical_base(ctx);
  EXPECT_TRUE(entails(base, make_implication(ctx, {"≥ 1660"}, {"Canvas"})));
  EXPECT_TRUE(entails(base, make_implication(ctx, {"Family Portrait", "Canvas"}, {"≥ 1660"})));
  EXPECT_EQ(base.size(), oracle::pseudo_intents(ctx).size());
}

TEST(CanonicalBase, PremisesArePseudoIntentsOnRandomContexts) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 120; ++t) {
    const auto ctx = oracle::random_context(rng, 5 + t % 4, 2 + t % 5, 0.5);
    const auto base = canonical_base(ctx);
    std::set<std::uint64_t> premises;
    for (const auto& imp : base) {
      premises.insert(imp.premise.to_ulong());
      EXPECT_TRUE(holds(ctx, imp));
      EXPECT_EQ(imp.premise | imp.conclusion, attribute_closure(ctx, imp.premise));
    }
    const auto expected = oracle::pseudo_intents(ctx);
    EXPECT_EQ(premises, std::set<std::uint64_t>(expected.begin(), expected.end()));
    // soundness and completeness: the base closure is the context closure
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << ctx.attribute_count()); ++b) {
      Bitset x(ctx.attribute_count(), b);
      EXPECT_EQ(implication_closure(base, x), attribute_closure(ctx, x));
    }
  }
}

TEST(Guttman, StaircaseWithWitness) {
  const auto ctx = from_rows({"X..", "XX.", "XXX"});
  const auto r = is_guttman(ctx);
  ASSERT_TRUE(r.guttman);
  ASSERT_TRUE(r.witness);
  for (std::size_t g = 0; g < 3; ++g)
    for (std::size_t m = 0; m < 3; ++m)
      EXPECT_EQ(ctx.incident(g, m), r.witness->s[g] <= r.witness->e[m]);
  // largest row gets rank 1
  EXPECT_EQ(r.witness->s, (std::vector<int>{3, 2, 1}));
}

TEST(Guttman, IdentityIsNot) { EXPECT_FALSE(is_guttman(from_rows({"X.", ".X"})).guttman); }

TEST(Guttman, MatchesClarifiedChainOracle) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 300; ++t) {
    const auto ctx = oracle::random_context(rng, 5, 5, 0.2 + 0.15 * (t % 5));
    const auto r = is_guttman(ctx);
    EXPECT_EQ(r.guttman, lattice_is_chain(concepts(clarify(ctx).context)));
    if (r.witness)
      for (std::size_t g = 0; g < 5; ++g)
        for (std::size_t m = 0; m < 5; ++m) {
          EXPECT_EQ(ctx.incident(g, m), r.witness->s[g] <= r.witness->e[m]);
        }
  }
}

TEST(Clarify, MergesDuplicateRow) {
  const auto c = clarify(from_rows({"X.", "X.", ".X"}));
  EXPECT_EQ(c.context.object_count(), 2u);
  EXPECT_EQ(c.context.object(0), "g0+g1");
  EXPECT_EQ(c.object_groups[0], (std::vector<std::size_t>{0, 1}));
}

TEST(Clarify, DistinctContextUnchanged) {
  const auto ctx = standard_scale(ScaleKind::contranominal, 3);
  EXPECT_EQ(clarify(ctx).context, ctx);
}

TEST(Cxt, RoundTripAndCrlf) {
  const auto ctx = rembrandt();
  const auto text = io::format_cxt(ctx);
  EXPECT_EQ(io::parse_cxt(text), ctx);
  std::string crlf;
  for (char c : text) {
    if (c == '\n') crlf += '\r';
    crlf += c;
  }
  EXPECT_EQ(io::parse_cxt(crlf), ctx);
  EXPECT_EQ(io::format_cxt(io::parse_cxt(text)), text);
}

TEST(Cxt, MalformedInputs) {
  EXPECT_THROW(io::parse_cxt("A\n\n1\n1\n\ng\nm\nX\n"), parse_error);
  EXPECT_THROW(io::parse_cxt("B\n\n1\n1\n\ng\nm\nXX\n"), parse_error);
  EXPECT_THROW(io::parse_cxt("B\n\n2\n1\n\ng\nm\nX\n"), parse_error);
  EXPECT_THROW(io::parse_cxt("B\n\n1\n1\n\ng\nm\nQ\n"), parse_error);
}
