#include <gtest/gtest.h>

#include <algorithm>

#include "esakia/corpus.hpp"
#include "esakia/errors.hpp"
#include "esakia/heyting.hpp"
#include "esakia/random.hpp"
#include "esakia/subalgebra.hpp"
#include "esakia/types.hpp"
#include "support/oracle.hpp"

using namespace esakia;

namespace {

PointSet named(const Poset& p, std::vector<std::string> names) { return points_named(p, names); }

std::vector<PointSet> sorted(std::vector<PointSet> v) {
  std::sort(v.begin(), v.end());
  return v;
}

struct Case {
  Poset poset;
  std::vector<PointSet> gens;
};

// Posets on <= 5 points with every generator set of size <= 2 on the small ones
// and seeded samples on the rest.
std::vector<Case> generator_cases() {
  std::vector<Case> out;
  Rng rng(17);
  for (const auto& p : exhaustive_posets(5)) {
    const auto ups = enumerate_upset_sets(p);
    if (p.size() <= 3) {
      out.push_back({p, {}});
      for (std::size_t i = 0; i < ups.size(); ++i) {
        out.push_back({p, {ups[i]}});
        for (std::size_t j = i + 1; j < ups.size(); ++j) out.push_back({p, {ups[i], ups[j]}});
      }
    } else {
      for (int t = 0; t < 4; ++t) {
        std::vector<PointSet> g;
        const auto k = uniform_below(rng, 3);
        for (std::uint64_t i = 0; i < k; ++i) g.push_back(ups[uniform_below(rng, ups.size())]);
        out.push_back({p, g});
      }
    }
  }
  return out;
}

std::vector<oracle::Mask> masks(const std::vector<PointSet>& sets) {
  std::vector<oracle::Mask> out;
  for (const auto& s : sets) out.push_back(oracle::to_mask(s));
  return out;
}

}  // namespace

TEST(LatticeClosure, Examples) {
  const Poset v = fork_v3();
  EXPECT_EQ(lattice_closure(v, std::vector<PointSet>{}), (std::vector<PointSet>{PointSet{}, v.all()}));
  EXPECT_EQ(lattice_closure(v, std::vector<PointSet>{named(v, {"x"}), named(v, {"y"})}),
            sorted({PointSet{}, named(v, {"x"}), named(v, {"y"}), named(v, {"x", "y"}), v.all()}));
  const Poset c = chain2();
  EXPECT_EQ(lattice_closure(c, std::vector<PointSet>{named(c, {"t"})}), enumerate_upset_sets(c));
}

TEST(Generate, ForkFromOneMaximalPoint) {
  const Poset v = fork_v3();
  const auto ra = generate(v, std::vector<PointSet>{named(v, {"x"})});
  EXPECT_TRUE(ra.closed());
  EXPECT_EQ(ra.size(), 5u);
  EXPECT_EQ(ra.rank_of(Upset(v, named(v, {"y"}))), 1u);
  EXPECT_EQ(ra.rank_of(Upset(v, named(v, {"x"}))), 0u);
  EXPECT_EQ(ra.rank_of(Upset::full(v)), 0u);
  EXPECT_EQ(ra.stratum(0), sorted({PointSet{}, named(v, {"x"}), v.all()}));
}

TEST(Generate, EmptyGeneratorsGiveConstants) {
  for (const auto& p : {fork_v3(), chain2(), antichain(3)}) {
    const auto ra = generate(p, std::vector<PointSet>{});
    EXPECT_EQ(ra.size(), 2u);
    EXPECT_EQ(ra.rank_of(Upset::empty(p)), 0u);
    EXPECT_EQ(ra.rank_of(Upset::full(p)), 0u);
  }
}

TEST(Generate, ChainTopPointIsRankZero) {
  const Poset c = chain2();
  const auto ra = generate(c, std::vector<PointSet>{named(c, {"t"})});
  EXPECT_EQ(ra.size(), 3u);
  for (std::size_t id = 0; id < ra.size(); ++id) EXPECT_EQ(ra.rank(id), 0u);
}

TEST(Generate, RankOfMissingElementAndMismatch) {
  const Poset a = antichain(3);
  const auto ra = generate(a, std::vector<PointSet>{PointSet::single(0)});
  EXPECT_FALSE(ra.rank_of(Upset(a, PointSet::single(1))).has_value());
  EXPECT_THROW((void)ra.rank_of(Upset::full(antichain(3))), PosetMismatch);
  EXPECT_THROW(generate(a, std::vector<PointSet>{PointSet::single(7)}), ForeignPoint);
  const Poset v = fork_v3();
  EXPECT_THROW(generate(v, std::vector<PointSet>{named(v, {"b"})}), NotAnUpset);
}

TEST(Generate, WitnessText) {
  const Poset v = fork_v3();
  const auto ra = generate(v, std::vector<PointSet>{named(v, {"x"})});
  const auto y = *ra.id_of(named(v, {"y"}));
  EXPECT_EQ(ra.witness_text(y), "(-> g0 0)");
  EXPECT_EQ(ra.witness_text(*ra.id_of(PointSet{})), "0");
  EXPECT_EQ(ra.witness_text(*ra.id_of(v.all())), "1");
}

TEST(Generate, BudgetExceeded) {
  Budget tight;
  tight.max_upsets = 3;
  const Poset a = antichain(3);
  EXPECT_THROW(generate(a, std::vector<PointSet>{PointSet::single(0), PointSet::single(1)}, tight), BudgetExceeded);
}

TEST(GenerateProperties, MatchesFixpointOracle) {
  for (const auto& [p, gens] : generator_cases()) {
    const auto o = oracle::Order::of(p);
    const auto expected = oracle::generated(o, masks(gens));
    const auto ra = generate(p, gens);
    std::set<oracle::Mask> got;
    for (const auto& e : ra.elements()) got.insert(oracle::to_mask(e));
    ASSERT_EQ(got, expected);
  }
}

TEST(GenerateProperties, StrataAreMonotoneAndLatticeClosed) {
  for (const auto& [p, gens] : generator_cases()) {
    const auto ra = generate(p, gens);
    const std::size_t upset_count = enumerate_upset_sets(p).size();
    EXPECT_LE(ra.last_stratum(), upset_count);
    for (std::size_t n = 0; n <= ra.last_stratum() + 1; ++n) {
      const auto s = ra.stratum(n);
      const auto next = ra.stratum(n + 1);
      EXPECT_TRUE(std::includes(next.begin(), next.end(), s.begin(), s.end()));
      for (const auto& a : s)
        for (const auto& b : s) {
          ASSERT_TRUE(std::binary_search(s.begin(), s.end(), a & b));
          ASSERT_TRUE(std::binary_search(s.begin(), s.end(), a | b));
        }
    }
    for (const auto& g : gens) EXPECT_TRUE(std::ranges::binary_search(ra.stratum(0), g));
    const auto top = ra.stratum(ra.last_stratum());
    for (const auto& a : top)
      for (const auto& b : top) ASSERT_TRUE(std::binary_search(top.begin(), top.end(), implies_set(p, a, b)));
  }
}

TEST(GenerateProperties, WitnessesAreSound) {
  for (const auto& [p, gens] : generator_cases()) {
    const auto ra = generate(p, gens);
    for (std::size_t id = 0; id < ra.size(); ++id) {
      EXPECT_EQ(ra.evaluate_witness(id).members(), ra.elements()[id]);
      EXPECT_EQ(ra.witness_rank(id), ra.rank(id));
    }
  }
}

TEST(GenerateProperties, RanksAreMinimalUpToThree) {
  for (const auto& [p, gens] : generator_cases()) {
    const auto o = oracle::Order::of(p);
    const auto by_rank = oracle::terms_by_rank(o, masks(gens), 3);
    const auto ra = generate(p, gens);
    for (std::size_t id = 0; id < ra.size(); ++id) {
      const auto m = oracle::to_mask(ra.elements()[id]);
      std::size_t least = 4;
      for (std::size_t r = 0; r <= 3 && least == 4; ++r)
        if (by_rank[r].count(m)) least = r;
      if (least <= 3)
        ASSERT_EQ(ra.rank(id), least);
      else
        ASSERT_GT(ra.rank(id), 3u);
    }
  }
}

TEST(RankTypeLemma, Examples) {
  const Poset v = fork_v3();
  const std::vector<PointSet> g{named(v, {"x"})};
  EXPECT_TRUE(check_rank_type_lemma(v, g, 0));
  EXPECT_TRUE(check_rank_type_lemma(v, g, 1));
  for (std::size_t n = 0; n < 4; ++n) EXPECT_TRUE(check_rank_type_lemma(antichain(3), std::vector<PointSet>{}, n));
}

TEST(RankTypeLemma, HoldsAgainstOracleStrata) {
  // Independent form: ~_n from the definition equals agreement on rank <= n terms.
  for (const auto& [p, gens] : generator_cases()) {
    const auto o = oracle::Order::of(p);
    const auto by_rank = oracle::terms_by_rank(o, masks(gens), 3);
    for (int n = 0; n <= 3; ++n) {
      std::vector<oracle::Mask> vals(by_rank[n].begin(), by_rank[n].end());
      const auto types = oracle::canonical(oracle::types_at_stage(o, masks(gens), n));
      const auto membership = oracle::canonical(oracle::types_at_stage(o, vals, 0));
      ASSERT_EQ(types, membership);
      ASSERT_TRUE(check_rank_type_lemma(p, gens, n));
    }
  }
}

TEST(DualityTheorem, Examples) {
  const Poset v = fork_v3();
  const auto fork = check_duality_theorem(v, std::vector<PointSet>{named(v, {"x"})});
  EXPECT_TRUE(fork.generates_all && fork.coloured);
  const Poset a = antichain(3);
  const auto anti = check_duality_theorem(a, std::vector<PointSet>{PointSet::single(0)});
  EXPECT_FALSE(anti.generates_all);
  EXPECT_FALSE(anti.coloured);
  EXPECT_EQ(oracle::generated(oracle::Order::of(a), {1}).size(), 4u);
  const auto one = check_duality_theorem(single_point(), std::vector<PointSet>{});
  EXPECT_TRUE(one.generates_all && one.coloured);
}

TEST(DualityTheorem, HoldsOnCases) {
  for (const auto& [p, gens] : generator_cases()) {
    const auto d = check_duality_theorem(p, gens);
    EXPECT_TRUE(d.holds());
    const auto o = oracle::Order::of(p);
    EXPECT_EQ(d.generates_all, oracle::generated(o, masks(gens)).size() == oracle::upsets_by_scan(o).size());
  }
}
