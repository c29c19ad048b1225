#include <gtest/gtest.h>

#include "metasum/errors.hpp"
#include "metasum/families.hpp"
#include "metasum/presentation.hpp"

using namespace metasum;

namespace {

Element evaluate(const MetacyclicParams& p, const FpPresentation& pres, const Word& w) {
  Element x = identity();
  for (Letter l : w) {
    const Element g = pres.generators[generator_of(l)].element;
    x = mul(p, x, (l & 1) ? inverse(p, g) : g);
  }
  return x;
}

}  // namespace

TEST(Words, FreeReduction) {
  EXPECT_EQ(free_reduce({0, 1}), Word{});
  EXPECT_EQ(free_reduce({0, 2, 3, 1, 4}), Word{4});
  EXPECT_EQ(free_reduce({0, 0, 1}), Word{0});
  EXPECT_EQ(power_word(2, 3), (Word{4, 4, 4}));
  EXPECT_EQ(power_word(1, -2), (Word{3, 3}));
  EXPECT_EQ(power_word(0, 0), Word{});
}

TEST(DiscreteLog, Examples) {
  const auto q8 = MetacyclicParams::validate(4, 2, 2, 3);
  EXPECT_EQ(discrete_log(q8, {3, 0}, {1, 0}), 3);
  EXPECT_EQ(discrete_log(q8, power(q8, {0, 1}, 2), {1, 0}), 2);
  EXPECT_EQ(discrete_log(q8, identity(), {0, 1}), 0);
  EXPECT_THROW(discrete_log(q8, {0, 1}, {1, 0}), NotAPower);
}

TEST(Presentation, S3Shape) {
  const auto p = MetacyclicParams::validate(3, 2, 0, 2);
  const auto pres = build_active_sum_presentation(build_theorem3_family(p));
  ASSERT_EQ(pres.generator_count(), 4u);
  for (std::size_t g = 0; g < 4; ++g) {
    EXPECT_EQ(pres.relators[g], power_word(g, pres.generators[g].order));
    EXPECT_EQ(pres.generators[g].name, "x" + std::to_string(g));
  }
  // Pairs (F, F) reduce to the empty word and are dropped.
  EXPECT_LE(pres.relators.size(), 4u + 16u - 4u);
  EXPECT_EQ(abelianized_order(pres).order(), 2);
}

TEST(Presentation, DumpParseRoundTrip) {
  const auto p = MetacyclicParams::validate(6, 2, 3, 5);
  const auto pres = build_active_sum_presentation(build_theorem3_family(p), RelatorMode::Exhaustive);
  const std::string text = pres.dump();
  const auto parsed = FpPresentation::parse(text);
  EXPECT_EQ(parsed.relators, pres.relators);
  ASSERT_EQ(parsed.generator_count(), pres.generator_count());
  for (std::size_t g = 0; g < pres.generator_count(); ++g)
    EXPECT_EQ(parsed.generators[g].order, pres.generators[g].order);
  EXPECT_EQ(parsed.dump(), text);
}

TEST(Presentation, ParseErrors) {
  EXPECT_THROW(FpPresentation::parse("gen x1 order 2\n"), std::invalid_argument);
  EXPECT_THROW(FpPresentation::parse("gen x0 order 2\nx1\n"), std::invalid_argument);
  EXPECT_THROW(FpPresentation::parse("gen x0 order 2\ny0\n"), std::invalid_argument);
  EXPECT_THROW(FpPresentation::parse("gen x0 size 2\n"), std::invalid_argument);
  const auto ok = FpPresentation::parse("# comment\ngen x0 order 3\n\nx0 x0 x0\n");
  EXPECT_EQ(ok.relators.size(), 1u);
}

TEST(Presentation, ExponentSums) {
  const auto pres = FpPresentation::parse("gen x0 order 4\ngen x1 order 4\nx0 x0 X1 x0\nX1 X1\n");
  const IntMatrix m = exponent_sum_matrix(pres);
  EXPECT_EQ(m, (IntMatrix{{3, -1}, {0, -2}}));
}

// Every relator holds in G under x_F -> g_F, so S maps onto G.
TEST(Presentation, RelatorsHoldInGroup) {
  for (const auto& p : valid_params_up_to(48)) {
    const Family f = build_theorem3_family(p);
    for (auto mode : {RelatorMode::GeneratorLevel, RelatorMode::Exhaustive}) {
      const auto pres = build_active_sum_presentation(f, mode);
      for (const auto& r : pres.relators) {
        ASSERT_FALSE(r.empty());
        ASSERT_EQ(free_reduce(r), r);
        ASSERT_EQ(evaluate(p, pres, r), identity()) << p.to_string() << " " << pres.word_to_string(r);
      }
    }
  }
}

TEST(Presentation, ExhaustiveContainsGeneratorLevel) {
  for (const auto& p : valid_params_up_to(30)) {
    const Family f = build_theorem3_family(p);
    const auto gen = build_active_sum_presentation(f, RelatorMode::GeneratorLevel);
    const auto all = build_active_sum_presentation(f, RelatorMode::Exhaustive);
    EXPECT_GE(all.relators.size(), gen.relators.size());
    EXPECT_EQ(abelianized_order(gen), abelianized_order(all)) << p.to_string();
  }
}
