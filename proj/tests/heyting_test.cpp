#include <gtest/gtest.h>

#include "esakia/corpus.hpp"
#include "esakia/errors.hpp"
#include "esakia/heyting.hpp"
#include "support/oracle.hpp"

using namespace esakia;
using Element = FiniteHeytingAlgebra::Element;

namespace {

Upset up(const Poset& p, std::vector<std::string> names) { return Upset(p, points_named(p, names)); }

}  // namespace

TEST(Lattice, IdentityLawsAndFork) {
  const Poset v = fork_v3();
  const Upset x = up(v, {"x"}), y = up(v, {"y"});
  EXPECT_TRUE(meet(x, Upset::full(v)) == x);
  EXPECT_TRUE(join(x, Upset::empty(v)) == x);
  EXPECT_TRUE(meet(x, y) == Upset::empty(v));
  EXPECT_TRUE(join(x, y) == up(v, {"x", "y"}));
}

TEST(Implies, Examples) {
  const Poset c = chain2();
  const Poset v = fork_v3();
  for (const auto& u : enumerate_upsets(v)) EXPECT_TRUE(implies(u, u) == Upset::full(v));
  EXPECT_TRUE(implies(Upset::full(c), up(c, {"t"})) == up(c, {"t"}));
  EXPECT_TRUE(implies(up(v, {"x"}), up(v, {"y"})) == up(v, {"y"}));

  // Same two answers from the adjunction scan.
  const auto co = oracle::Order::of(c);
  const auto cu = oracle::upsets_by_scan(co);
  EXPECT_EQ(oracle::implies_by_scan(cu, co.all(), 0b10), 0b10u);
  const auto vo = oracle::Order::of(v);
  const oracle::Mask mx = oracle::to_mask(points_named(v, std::vector<std::string>{"x"}));
  const oracle::Mask my = oracle::to_mask(points_named(v, std::vector<std::string>{"y"}));
  EXPECT_EQ(oracle::implies_by_scan(oracle::upsets_by_scan(vo), mx, my), my);
}

TEST(Negation, Examples) {
  const Poset c = chain2();
  const Poset v = fork_v3();
  EXPECT_TRUE(neg(Upset::full(v)) == Upset::empty(v));
  EXPECT_TRUE(neg(Upset::empty(v)) == Upset::full(v));
  EXPECT_TRUE(neg(up(v, {"x"})) == up(v, {"y"}));
  EXPECT_TRUE(neg(up(c, {"t"})) == Upset::empty(c));
}

TEST(Operations, RejectMixedPosets) {
  const Poset a = fork_v3();
  const Poset b = fork_v3();
  EXPECT_THROW(meet(Upset::full(a), Upset::full(b)), PosetMismatch);
  EXPECT_THROW(join(Upset::full(a), Upset::full(b)), PosetMismatch);
  EXPECT_THROW(implies(Upset::full(a), Upset::full(b)), PosetMismatch);
}

TEST(Implies, AgreesWithAdjunctionScan) {
  auto corpus = exhaustive_posets(4);
  const auto extra = random_posets(20, 6, 3);
  corpus.insert(corpus.end(), extra.begin(), extra.end());
  for (const auto& p : corpus) {
    const auto o = oracle::Order::of(p);
    const auto ups = oracle::upsets_by_scan(o);
    for (auto u : ups)
      for (auto v : ups) {
        const PointSet got = implies_set(p, oracle::from_mask(u), oracle::from_mask(v));
        EXPECT_EQ(oracle::to_mask(got), oracle::implies_by_scan(ups, u, v));
        EXPECT_TRUE(is_up_closed(p, got));
      }
  }
}

TEST(AlgebraOf, Sizes) {
  EXPECT_EQ(algebra_of(chain2()).size(), 3u);
  EXPECT_EQ(algebra_of(fork_v3()).size(), 5u);
  const auto b = algebra_of(single_point());
  EXPECT_EQ(b.size(), 2u);
  EXPECT_EQ(b.neg(b.bottom()), b.top());
  EXPECT_EQ(b.neg(b.top()), b.bottom());
}

TEST(AlgebraOf, ChainIsThreeElementChain) {
  const auto a = algebra_of(chain2());
  // 0 < m < 1 with m -> 0 = 0.
  EXPECT_EQ(a.bottom(), 0u);
  EXPECT_EQ(a.top(), 2u);
  EXPECT_TRUE(a.leq(0, 1) && a.leq(1, 2));
  EXPECT_EQ(a.implies(1, 0), 0u);
  EXPECT_EQ(a.implies(2, 1), 1u);
}

TEST(AlgebraOf, HeytingLawsOnCorpus) {
  for (const auto& p : exhaustive_posets(4)) {
    const auto a = algebra_of(p);
    const auto n = static_cast<Element>(a.size());
    for (Element x = 0; x < n; ++x) {
      EXPECT_EQ(a.implies(x, a.top()), a.top());
      EXPECT_EQ(a.implies(a.bottom(), x), a.top());
      EXPECT_EQ(a.implies(a.top(), x), x);
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z) {
          ASSERT_EQ(a.leq(a.meet(x, y), z), a.leq(x, a.implies(y, z)));
          ASSERT_EQ(a.meet(x, a.join(y, z)), a.join(a.meet(x, y), a.meet(x, z)));
        }
    }
  }
}

TEST(AlgebraOf, ElementLookupAndErrors) {
  const Poset v = fork_v3();
  const auto a = algebra_of(v);
  ASSERT_TRUE(a.poset().has_value());
  EXPECT_EQ(a.element_of(v.all()), a.top());
  EXPECT_FALSE(a.element_of(points_named(v, std::vector<std::string>{"b"})).has_value());
  EXPECT_THROW(a.check_element(5), ForeignElement);
  Budget tight;
  tight.max_upsets = 4;
  EXPECT_THROW(algebra_of(v, tight), BudgetExceeded);
}

TEST(FormatPoints, UsesNames) {
  const Poset v = fork_v3();
  EXPECT_EQ(format_points(v, points_named(v, std::vector<std::string>{"x", "y"})), "{x,y}");
  EXPECT_EQ(format_points(v, PointSet{}), "{}");
}
