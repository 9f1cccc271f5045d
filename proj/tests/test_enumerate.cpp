#include <gtest/gtest.h>

#include <set>

#include "schur/constructions.hpp"
#include "schur/enumerate.hpp"

using namespace schur;

namespace {

std::set<std::vector<std::uint32_t>> keys(const std::vector<SRing>& rings) {
  std::set<std::vector<std::uint32_t>> s;
  for (const auto& r : rings) s.insert(r.labels());
  return s;
}

int divisor_count(int m) {
  int c = 0;
  for (int d = 1; d <= m; ++d) c += m % d == 0;
  return c;
}

}  // namespace

TEST(Enumerate, SmallCounts) {
  EXPECT_EQ(enumerate_srings(AbelianGroup({2})).rings.size(), 1u);
  EXPECT_EQ(enumerate_srings(AbelianGroup({3})).rings.size(), 2u);
  EXPECT_EQ(enumerate_srings_brute(AbelianGroup({2})).size(), 1u);
  EXPECT_EQ(enumerate_srings_brute(AbelianGroup({3})).size(), 2u);
  EXPECT_EQ(enumerate_srings(AbelianGroup()).rings.size(), 1u);
}

// Over Z_p every S-ring is cyclotomic, one per subgroup of Aut(Z_p) = Z_{p-1}.
TEST(Enumerate, PrimeCyclicMatchesDivisorCount) {
  for (int p : {2, 3, 5, 7, 11, 13}) {
    AbelianGroup g({p});
    EXPECT_EQ(enumerate_srings(g).rings.size(), std::size_t(divisor_count(p - 1))) << p;
  }
}

TEST(Enumerate, MatchesBruteForce) {
  for (auto orders : std::vector<std::vector<int>>{
           {2}, {3}, {4}, {2, 2}, {9}, {3, 3}, {5}, {6}, {7}, {8}, {2, 4}, {2, 2, 2}}) {
    AbelianGroup g(orders);
    const auto fast = enumerate_srings(g);
    const auto slow = enumerate_srings_brute(g);
    EXPECT_EQ(keys(fast.rings), keys(slow)) << g.to_string();
    EXPECT_EQ(fast.rings.size(), keys(fast.rings).size());
    EXPECT_TRUE(std::is_sorted(fast.rings.begin(), fast.rings.end(), canonical_less));
  }
}

TEST(Enumerate, BruteRejectsLargeGroups) {
  EXPECT_THROW(enumerate_srings_brute(AbelianGroup({11})), InvalidArgument);
  EnumerateOptions opt;
  opt.max_order = 10;
  EXPECT_THROW(enumerate_srings(AbelianGroup({11}), opt), BudgetExceeded);
}

TEST(Enumerate, EachPruneIsSound) {
  for (auto orders : std::vector<std::vector<int>>{{9}, {3, 3}, {2, 4}}) {
    AbelianGroup g(orders);
    const auto ref = keys(enumerate_srings(g).rings);
    for (int off = 0; off < 4; ++off) {
      EnumerateOptions opt;
      opt.prune_inverse = off != 0;
      opt.prune_multiplier = off != 1;
      opt.prune_module = off != 2;
      if (off == 3) opt.prune_inverse = opt.prune_multiplier = opt.prune_module = false;
      EXPECT_EQ(keys(enumerate_srings(g, opt).rings), ref) << g.to_string() << " off=" << off;
    }
  }
}

TEST(Enumerate, ParallelMatchesSequential) {
  AbelianGroup g({3, 9});
  EnumerateOptions one, four;
  four.jobs = 4;
  const auto a = enumerate_srings(g, one);
  const auto b = enumerate_srings(g, four);
  EXPECT_EQ(keys(a.rings), keys(b.rings));
  EXPECT_EQ(a.stats.nodes, b.stats.nodes);
}

TEST(Enumerate, OutputClosedUnderAutAndPowers) {
  for (auto orders : std::vector<std::vector<int>>{{3, 3}, {27}, {2, 8}}) {
    AbelianGroup g(orders);
    const auto rings = enumerate_srings(g).rings;
    const auto all = keys(rings);
    for (const auto& r : rings) {
      for (const auto& f : g.automorphisms()) EXPECT_TRUE(all.count(image_labels(r.labels(), f)));
    }
  }
}

TEST(Enumerate, ModuleOffOnZ3xZ9) {
  AbelianGroup g({3, 9});
  const auto ref = enumerate_srings(g);
  for (const auto& r : ref.rings) EXPECT_TRUE(std::holds_alternative<SRing>(validate(g, r.classes())));
  EnumerateOptions opt;
  opt.prune_module = false;
  const auto loose = enumerate_srings(g, opt);
  EXPECT_EQ(keys(loose.rings), keys(ref.rings));
  EXPECT_GT(loose.stats.rejected_leaves, 0u);
  opt.prune_module = true;
  opt.prune_inverse = false;
  EXPECT_EQ(keys(enumerate_srings(g, opt).rings), keys(ref.rings));
}

// Regression constants produced by this enumerator (cross-checked with the
// module prune disabled); not taken from any external table.
TEST(Enumerate, RegressionCounts) {
  EXPECT_EQ(enumerate_srings(AbelianGroup({27})).rings.size(), 25u);
  EXPECT_EQ(enumerate_srings(AbelianGroup({3, 9})).rings.size(), 391u);
  EXPECT_EQ(enumerate_srings(AbelianGroup({5, 5})).rings.size(), 458u);
  EXPECT_EQ(enumerate_srings(AbelianGroup({3, 27})).rings.size(), 2855u);
}

TEST(Enumerate, BudgetIsEnforced) {
  EnumerateOptions opt;
  opt.node_budget = 10;
  EXPECT_THROW(enumerate_srings(AbelianGroup({3, 9}), opt), BudgetExceeded);
}

TEST(Classify, GroupRingIsAlone) {
  AbelianGroup g({3, 9});
  auto cls = classify_up_to_cayley({group_ring(g)});
  ASSERT_EQ(cls.size(), 1u);
  EXPECT_EQ(cls[0].size, 1u);
}

TEST(Classify, SizesSumAndDivideAut) {
  for (auto orders : std::vector<std::vector<int>>{{3, 3}, {9}, {2, 4}}) {
    AbelianGroup g(orders);
    const auto rings = enumerate_srings(g).rings;
    const auto cls = classify_up_to_cayley(rings);
    std::size_t total = 0;
    for (const auto& c : cls) {
      total += c.size;
      EXPECT_EQ(g.automorphisms().size() % c.size, 0u);
      EXPECT_TRUE(keys(rings).count(c.representative.labels()));
    }
    EXPECT_EQ(total, rings.size());
    // Representatives are pairwise non-isomorphic.
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t j = i + 1; j < cls.size(); ++j)
        EXPECT_FALSE(cayley_isomorphic(cls[i].representative, cls[j].representative));
  }
}

TEST(Filter, Predicates) {
  AbelianGroup g({3, 3});
  const auto rings = enumerate_srings(g).rings;
  EXPECT_EQ(filter_rings(rings, "always").size(), rings.size());
  EXPECT_EQ(filter_rings(rings, "regular").size() + filter_rings(rings, "nonregular").size(),
            rings.size());
  EXPECT_EQ(filter_rings(rings, "rational,!rational").size(), 0u);
  EXPECT_THROW(filter_rings(rings, "bogus"), InvalidArgument);
  for (const auto& r : filter_rings(rings, "quasi-thin"))
    for (const auto& c : r.classes()) EXPECT_LE(c.size(), 2u);
}

TEST(Filter, TableOneRingsAreRegularTrivialRadical) {
  AbelianGroup g({3, 9});
  const auto rings = enumerate_srings(g).rings;
  const auto chosen = filter_rings(rings, "regular,trivial-radical");
  for (int row = 0; row < 10; ++row) {
    const auto t = table1(row, 2);
    EXPECT_TRUE(keys(chosen).count(t.labels())) << row;
  }
}
