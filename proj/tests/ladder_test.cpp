#include <gtest/gtest.h>

#include <set>

#include "esakia/errors.hpp"
#include "esakia/ladder.hpp"
#include "esakia/random.hpp"
#include "esakia/types.hpp"
#include "support/oracle.hpp"

using namespace esakia;

namespace {

PointSet named(const Poset& p, std::vector<std::string> names) { return points_named(p, names); }

std::vector<PointSet> canonical_minus_last(const Poset& ladder, int n) {
  auto sets = canonical_colouring(ladder, n).sets();
  sets.pop_back();
  return sets;
}

}  // namespace

TEST(BuildLadder, WidthOneExample) {
  const Poset l = build_ladder({1, 2, false});
  EXPECT_EQ(l.size(), 6u);
  auto above = [&](const std::string& x) {
    return l.up(*l.index_of(x)) - PointSet::single(*l.index_of(x));
  };
  EXPECT_EQ(above("x^0_1"), named(l, {"x^0_0", "x^2_0"}));
  EXPECT_EQ(above("x^1_1"), named(l, {"x^0_0", "x^1_0"}));
  EXPECT_EQ(above("x^2_1"), named(l, {"x^0_0", "x^1_0", "x^2_0"}));
}

TEST(BuildLadder, PointCounts) {
  EXPECT_EQ(build_ladder({2, 3, true}).size(), 16u);
  EXPECT_EQ(build_ladder({0, 3, false}).size(), 6u);
  EXPECT_EQ((LadderSpec{3, 5, true}.point_count()), 46u);
}

TEST(BuildLadder, InvalidSpecs) {
  EXPECT_THROW(build_ladder({-1, 2, true}), InvalidArgument);
  EXPECT_THROW(build_ladder({1, 0, true}), InvalidArgument);
  EXPECT_THROW(build_ladder({4, 16, true}), BudgetExceeded);
  EXPECT_THROW(build_ladder({8, 1, true}), BudgetExceeded);
}

TEST(BuildLadder, MatchesRuleOracle) {
  for (int n = 0; n <= 2; ++n)
    for (int depth = 1; depth <= 8; ++depth)
      for (bool bottom : {false, true}) {
        const LadderSpec spec{n, depth, bottom};
        const Poset l = build_ladder(spec);
        const int w = static_cast<int>(spec.width());
        for (int x = 0; x < static_cast<int>(l.size()); ++x)
          for (int y = 0; y < static_cast<int>(l.size()); ++y)
            ASSERT_EQ(l.leq(x, y), oracle::ladder_leq(w, depth, bottom, x, y));
      }
}

TEST(BuildLadder, WidthLaw) {
  for (int n = 0; n <= 2; ++n)
    for (int depth = 2; depth <= 8; ++depth) {
      const LadderSpec spec{n, depth, true};
      const Poset l = build_ladder(spec);
      for (int i = 0; i < depth; ++i) {
        const auto level = l.level_points(i);
        ASSERT_EQ(level.size(), spec.width());
        if (i == 0) continue;
        for (auto x : level) {
          std::size_t above_prev = 0;
          for (auto y : l.level_points(i - 1)) above_prev += l.leq(x, y) ? 1 : 0;
          EXPECT_GE(above_prev, spec.width() - 1);
          for (int j = 0; j + 1 < i; ++j)
            for (auto y : l.level_points(j)) EXPECT_TRUE(l.leq(x, y));
        }
      }
    }
}

TEST(BuildLadder, WidthTwoShape) {
  // Width 2: x^0_{i+1} lies below x^0_i only, x^1_{i+1} below both.
  const Poset l = build_ladder({0, 4, false});
  for (int i = 0; i + 1 < 4; ++i) {
    const auto a = ladder_index({0, 4, false}, i + 1, 0), b = ladder_index({0, 4, false}, i + 1, 1);
    const auto top0 = ladder_index({0, 4, false}, i, 0), top1 = ladder_index({0, 4, false}, i, 1);
    EXPECT_TRUE(l.leq(a, top0));
    EXPECT_FALSE(l.leq(a, top1));
    EXPECT_TRUE(l.leq(b, top0) && l.leq(b, top1));
  }
}

TEST(CanonicalColouring, BinaryInjection) {
  EXPECT_EQ(ladder_injection(1, 0), std::vector<int>{});
  EXPECT_EQ(ladder_injection(1, 1), std::vector<int>{0});
  EXPECT_EQ(ladder_injection(1, 2), std::vector<int>{1});
  EXPECT_EQ(ladder_injection(2, 3), (std::vector<int>{0, 1}));
  const Poset l = build_ladder({1, 3, true});
  const auto c = canonical_colouring(l, 1);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].members(), named(l, {"x^1_0"}));
  EXPECT_EQ(c[1].members(), named(l, {"x^2_0"}));
}

TEST(CanonicalColouring, WidthTwoUsesSwappedLabels) {
  const Poset l = build_ladder({0, 5, true});
  const auto c = canonical_colouring(l, 0);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].members(), named(l, {"x^0_0"}));
  EXPECT_TRUE(is_coloured(c));
  // The unswapped choice leaves x^0_0 and x^0_1 with one type.
  const auto other = omega_types(l, std::vector<PointSet>{named(l, {"x^1_0"})});
  EXPECT_EQ(other.block_of(*l.index_of("x^0_0")), other.block_of(*l.index_of("x^0_1")));
}

TEST(CanonicalColouring, InjectiveAndLevelZeroSeparated) {
  for (int n = 0; n <= 4; ++n) {
    std::set<std::vector<int>> seen;
    for (int l = 0; l <= (1 << n); ++l) {
      const auto e = ladder_injection(n, l);
      for (int k : e) EXPECT_LE(k, n);
      EXPECT_TRUE(seen.insert(e).second);
    }
  }
  for (int n = 0; n <= 2; ++n) {
    const Poset l = build_ladder({n, 3, true});
    const auto t0 = initial_partition(canonical_colouring(l, n));
    std::set<std::uint32_t> blocks;
    for (auto x : l.level_points(0)) blocks.insert(t0.block_of(x));
    EXPECT_EQ(blocks.size(), l.level_points(0).size());
  }
}

TEST(CanonicalColouring, RejectsWrongWidth) {
  EXPECT_THROW(canonical_colouring(build_ladder({1, 3, true}), 2), InvalidArgument);
  const Poset plain = Poset::validate({"a"}, {});
  EXPECT_THROW(canonical_colouring(plain, 0), InvalidArgument);
}

TEST(VerifyCanonical, ColoursTruncations) {
  for (int depth = 1; depth <= 8; ++depth) {
    EXPECT_TRUE(verify_canonical(0, depth)) << depth;
    EXPECT_TRUE(verify_canonical(1, depth)) << depth;
  }
  for (int depth = 1; depth <= 6; ++depth) EXPECT_TRUE(verify_canonical(2, depth)) << depth;
}

TEST(CollapseCheck, CanonicalMinusOneColour) {
  const LadderSpec spec{1, 8, true};
  const Poset l = build_ladder(spec);
  const auto r = collapse_check(spec, l, Colouring::from_sets(l, canonical_minus_last(l, 1)));
  EXPECT_TRUE(r.bound_satisfied);
  ASSERT_TRUE(r.first_merge_level && r.collapse_level);
  EXPECT_GE(*r.collapse_level, *r.first_merge_level);
}

TEST(CollapseCheck, TrivialColour) {
  const LadderSpec spec{1, 8, true};
  const Poset l = build_ladder(spec);
  const auto r = collapse_check(spec, l, Colouring::from_sets(l, std::vector<PointSet>{PointSet{}}));
  EXPECT_EQ(r.first_merge_level, 0);
  EXPECT_EQ(r.collapse_level, 0);
  EXPECT_TRUE(r.bound_satisfied);
  for (auto c : r.classes_per_level) EXPECT_EQ(c, 1u);
}

TEST(CollapseCheck, SampledSupportInTopLevels) {
  for (int n : {1, 2}) {
    const LadderSpec spec{n, (1 << n) + 6, true};
    const Poset l = build_ladder(spec);
    const auto pool = upsets_supported_in(l, 2);
    Rng rng(42);
    for (int s = 0; s < 100; ++s) {
      std::vector<PointSet> colours;
      for (int k = 0; k < n; ++k) colours.push_back(pool[uniform_below(rng, pool.size())]);
      const auto r = collapse_check(spec, l, Colouring::from_sets(l, colours));
      ASSERT_TRUE(r.bound_satisfied);
      if (r.first_merge_level && r.collapse_level) EXPECT_GE(*r.collapse_level, *r.first_merge_level);
      ASSERT_TRUE(r.anchor_level.has_value());
      EXPECT_GE(*r.anchor_level, *r.first_merge_level);
    }
  }
}

TEST(CollapseCheck, SupportTooDeep) {
  const LadderSpec spec{1, 8, true};
  const Poset l = build_ladder(spec);
  const auto deep = up_closure(l, named(l, {"x^0_4"}));
  EXPECT_THROW(collapse_check(spec, l, Colouring(l, {deep})), SupportTooDeep);
  const auto ok = up_closure(l, named(l, {"x^0_3"}));
  EXPECT_NO_THROW(collapse_check(spec, l, Colouring(l, {ok})));
}

TEST(NextLevel, Examples) {
  const LadderSpec s1{1, 8, true};
  const Poset l1 = build_ladder(s1);
  EXPECT_TRUE(next_level_bound_check(s1, l1, Colouring::from_sets(l1, canonical_minus_last(l1, 1))).holds());
  EXPECT_TRUE(next_level_bound_check(s1, l1, Colouring(l1)).holds());

  const LadderSpec s2{2, 7, true};
  const Poset l2 = build_ladder(s2);
  const auto ups = enumerate_upset_sets(l2);
  Rng rng(9);
  for (int t = 0; t < 200; ++t) {
    std::vector<PointSet> colours{ups[uniform_below(rng, ups.size())], ups[uniform_below(rng, ups.size())]};
    ASSERT_TRUE(next_level_bound_check(s2, l2, Colouring::from_sets(l2, colours)).holds());
  }
}

TEST(NonColourability, ExhaustiveSmallCases) {
  const auto r = exhaustive_non_colourability(1, 4);
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(r.point_count, 13u);
  EXPECT_EQ(r.tuples_checked, r.upset_count);
  EXPECT_LT(r.max_classes, r.point_count);

  for (int depth = 2; depth <= 4; ++depth) {
    const auto z = exhaustive_non_colourability(0, depth);
    EXPECT_TRUE(z.holds());
    EXPECT_EQ(z.tuples_checked, 1u);
  }
  // One colour fewer than the canonical colouring fails at every small depth.
  for (int depth = 4; depth <= 6; ++depth) EXPECT_TRUE(exhaustive_non_colourability(1, depth).holds());
}

TEST(NonColourability, SampledWidthFive) {
  const auto r = sampled_non_colourability(2, 3, 2000, 1);
  EXPECT_TRUE(r.holds());
  EXPECT_TRUE(r.sampled);
  EXPECT_EQ(r.tuples_checked, 2000u);
  EXPECT_EQ(r.seed, 1u);
}

TEST(NonColourability, Budget) {
  Budget tight;
  tight.max_tuples = 10;
  EXPECT_THROW(exhaustive_non_colourability(1, 4, tight), BudgetExceeded);
}

TEST(MinColours, LadderTruncations) {
  for (int depth = 4; depth <= 5; ++depth) {
    EXPECT_EQ(min_colours(build_ladder({0, depth, true})), 1u);
    EXPECT_EQ(min_colours(build_ladder({1, depth, true})), 2u);
  }
}
