#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "schur/group.hpp"

using namespace schur;

namespace {

// Subgroup lattice by adding one element at a time to every known subgroup.
std::set<std::vector<Index>> lattice_oracle(const AbelianGroup& g) {
  auto close = [&](std::vector<Index> s) {
    std::vector<char> in(g.size(), 0);
    in[0] = 1;
    for (Index x : s) in[x] = 1;
    for (bool grew = true; grew;) {
      grew = false;
      for (Index a = 0; a < g.size(); ++a)
        for (Index b = 0; b < g.size() && in[a]; ++b)
          if (in[b] && !in[g.mul(a, b)]) in[g.mul(a, b)] = grew = true;
    }
    std::vector<Index> out;
    for (Index a = 0; a < g.size(); ++a)
      if (in[a]) out.push_back(a);
    return out;
  };
  std::set<std::vector<Index>> found{close({})};
  std::vector<std::vector<Index>> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<std::vector<Index>> next;
    for (const auto& h : frontier)
      for (Index x = 0; x < g.size(); ++x) {
        auto s = h;
        s.push_back(x);
        auto k = close(s);
        if (found.insert(k).second) next.push_back(k);
      }
    frontier = std::move(next);
  }
  return found;
}

}  // namespace

TEST(Group, ElementArithmetic) {
  AbelianGroup g({3, 9});
  EXPECT_EQ(g.size(), 27u);
  EXPECT_EQ(g.exponent(), 9);
  EXPECT_EQ(g.mul(Element{{1, 2}}, Element{{2, 8}}), (Element{{0, 1}}));
  EXPECT_EQ(g.inv(Element{{0, 0}}), (Element{{0, 0}}));
  EXPECT_EQ(g.pow(Element{{0, 1}}, 9), (Element{{0, 0}}));
  EXPECT_EQ(g.pow(Element{{1, 1}}, -1), (Element{{2, 8}}));
  EXPECT_EQ(g.order(Element{{0, 0}}), 1);
  EXPECT_EQ(g.order(Element{{0, 3}}), 3);
  EXPECT_EQ(g.order(Element{{1, 1}}), 9);
  EXPECT_THROW(g.index(Element{{1}}), InvalidArgument);
}

TEST(Group, CanonicalIndexIsMixedRadix) {
  AbelianGroup g({3, 9});
  EXPECT_EQ(g.index(Element{{1, 0}}), 9u);
  EXPECT_EQ(g.index(Element{{0, 1}}), 1u);
  const auto all = g.elements();
  ASSERT_EQ(all.size(), 27u);
  for (Index i = 0; i < all.size(); ++i) EXPECT_EQ(g.index(all[i]), i);
}

TEST(Group, OrdersDivideExponent) {
  for (auto orders : std::vector<std::vector<int>>{{3, 9}, {2, 6}, {27}, {3, 3, 3}}) {
    AbelianGroup g(orders);
    for (Index a = 0; a < g.size(); ++a) {
      EXPECT_EQ(g.pow(a, g.order(a)), 0u);
      EXPECT_EQ(g.exponent() % g.order(a), 0);
    }
  }
}

TEST(Group, SubgroupCountsMatchLatticeOracle) {
  const std::vector<std::pair<std::vector<int>, std::size_t>> cases = {
      {{3}, 2}, {{9}, 3}, {{3, 3}, 6}, {{3, 9}, 10}, {{2, 2}, 5},
      {{4}, 3}, {{2, 4}, 8}, {{27}, 4}, {{3, 3, 3}, 28}};
  for (const auto& [orders, count] : cases) {
    AbelianGroup g(orders);
    const auto subs = subgroups(g);
    EXPECT_EQ(subs.size(), count) << g.to_string();
    std::set<std::vector<Index>> mine;
    for (const auto& h : subs) {
      EXPECT_TRUE(is_subgroup(g, h.members()));
      mine.insert(h.members());
    }
    EXPECT_EQ(mine.size(), subs.size());
    EXPECT_EQ(mine, lattice_oracle(g)) << g.to_string();
    EXPECT_TRUE(std::is_sorted(subs.begin(), subs.end()));
  }
}

TEST(Group, AllGroupsOfOrderAtMost27HaveCompleteLattices) {
  for (auto orders : std::vector<std::vector<int>>{
           {2}, {4}, {2, 2}, {8}, {2, 4}, {2, 2, 2}, {12}, {2, 6}, {16}, {4, 4},
           {2, 8}, {2, 2, 4}, {2, 2, 2, 2}, {18}, {3, 6}, {24}, {2, 12}, {2, 2, 6}}) {
    AbelianGroup g(orders);
    std::set<std::vector<Index>> mine;
    for (const auto& h : subgroups(g)) mine.insert(h.members());
    EXPECT_EQ(mine, lattice_oracle(g)) << g.to_string();
  }
}

TEST(Group, SubgroupCap) {
  AbelianGroup g({3, 3, 3, 3, 3, 3});
  EXPECT_THROW(subgroups(g), BudgetExceeded);
  EXPECT_NO_THROW(subgroups(AbelianGroup({3, 9}), 27));
}

TEST(Group, RadicalAndGenerated) {
  AbelianGroup g({3, 9});
  std::vector<Index> coset;  // sC
  for (int b = 0; b < 9; ++b) coset.push_back(g.index(Element{{1, b}}));
  const auto r = radical(g, coset);
  EXPECT_EQ(r.size(), 9u);
  for (Index x : r.members()) EXPECT_EQ(g.element(x).residues[0], 0);
  EXPECT_EQ(radical(g, std::vector<Index>{0}).size(), 1u);
  const Index c1 = g.index(Element{{0, 3}});
  EXPECT_EQ(generated(g, std::vector<Index>{c1}).size(), 3u);
  EXPECT_EQ(generated(g, std::vector<Index>{0}).size(), 1u);
  EXPECT_EQ(generated(g, std::vector<Index>{g.generator(0), g.generator(1)}).size(), 27u);
  EXPECT_THROW(generated(g, std::vector<Index>{}), InvalidArgument);
  EXPECT_THROW(radical(g, std::vector<Index>{}), InvalidArgument);
}

TEST(Group, AutomorphismCounts) {
  const std::vector<std::pair<std::vector<int>, std::size_t>> cases = {
      {{3}, 2}, {{9}, 6}, {{3, 3}, 48}, {{3, 9}, 108}, {{2, 2}, 6},
      {{4}, 2}, {{2, 4}, 8}, {{27}, 18}};
  for (const auto& [orders, count] : cases) {
    AbelianGroup g(orders);
    const auto& auts = g.automorphisms();
    EXPECT_EQ(auts.size(), count) << g.to_string();
    for (const auto& f : auts) {
      EXPECT_TRUE(f.is_automorphism());
      EXPECT_TRUE(f.is_homomorphism());
    }
  }
}

TEST(Group, AutomorphismsFormAGroup) {
  AbelianGroup g({3, 9});
  const auto& auts = g.automorphisms();
  std::set<std::vector<Index>> tables;
  for (const auto& f : auts) tables.insert(f.table());
  for (const auto& f : auts) {
    EXPECT_TRUE(tables.count(f.inverse().table()));
    for (const auto& h : auts) EXPECT_TRUE(tables.count(f.then(h).table()));
  }
}

TEST(Group, MapFromGeneratorImages) {
  AbelianGroup g({3, 9});
  const Index s = g.index(Element{{1, 0}});
  const Index x = g.index(Element{{0, 1}});
  const Index c1 = g.index(Element{{0, 3}});
  auto id = map_from_generator_images(g, std::vector<Index>{s, x});
  EXPECT_EQ(id, GroupMap::identity(g));
  // x -> sx, s -> s c1 (images listed in coordinate order s, x)
  auto k6 = map_from_generator_images(g, std::vector<Index>{g.mul(s, c1), g.mul(s, x)});
  EXPECT_TRUE(k6.is_automorphism());
  EXPECT_EQ(k6.order(), 3);
  auto sq = map_from_generator_images(g, std::vector<Index>{s, g.mul(x, x)});
  EXPECT_TRUE(sq.is_automorphism());
  // s has order 3; sending it to x (order 9) is ill-defined.
  EXPECT_THROW(map_from_generator_images(g, std::vector<Index>{x, x}), InvalidArgument);
  auto proj = map_from_generator_images(g, std::vector<Index>{s, 0});
  EXPECT_FALSE(proj.injective());
  EXPECT_TRUE(proj.is_homomorphism());
}

TEST(Group, Quotients) {
  AbelianGroup g({3, 9});
  const Index c1 = g.index(Element{{0, 3}});
  auto q = quotient(g, generated(g, std::vector<Index>{c1}));
  EXPECT_EQ(q.group.orders(), (std::vector<int>{3, 3}));
  auto t = quotient(g, trivial_subgroup(g));
  EXPECT_EQ(t.group.orders(), g.orders());
  const Index s = g.generator(0);
  auto e = generated(g, std::vector<Index>{s, c1});
  auto qe = quotient(g, e);
  EXPECT_EQ(qe.group.orders(), (std::vector<int>{3}));
  for (const auto& h : subgroups(g)) {
    auto qh = quotient(g, h);
    EXPECT_EQ(qh.group.size() * h.size(), g.size());
    EXPECT_TRUE(qh.projection.is_homomorphism());
    EXPECT_TRUE(qh.projection.surjective());
    for (Index a = 0; a < g.size(); ++a)
      EXPECT_EQ(qh.projection(a) == 0, h.contains(a));
  }
}

TEST(Group, Presentations) {
  AbelianGroup g({3, 9});
  for (const auto& h : subgroups(g)) {
    auto p = present(g, h);
    EXPECT_EQ(p.group.size(), h.size());
    std::vector<Index> emb = p.embedding;
    std::sort(emb.begin(), emb.end());
    EXPECT_EQ(emb, h.members());
    for (Index a = 0; a < p.group.size(); ++a)
      for (Index b = 0; b < p.group.size(); ++b)
        EXPECT_EQ(p.embedding[p.group.mul(a, b)], g.mul(p.embedding[a], p.embedding[b]));
  }
  EXPECT_EQ(invariant_factors(AbelianGroup({2, 3})), (std::vector<int>{6}));
  EXPECT_EQ(invariant_factors(AbelianGroup({9, 3})), (std::vector<int>{3, 9}));
}
