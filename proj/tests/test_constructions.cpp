#include <gtest/gtest.h>

#include "schur/constructions.hpp"

using namespace schur;

namespace {

std::vector<std::size_t> class_sizes(const SRing& a) {
  std::vector<std::size_t> s;
  for (const auto& c : a.classes()) s.push_back(c.size());
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST(Cyclotomic, IdentityGivesGroupRing) {
  AbelianGroup g({3, 9});
  std::vector<GroupMap> k{GroupMap::identity(g)};
  EXPECT_EQ(cyclotomic(g, k), group_ring(g));
}

TEST(Cyclotomic, InversionOnZ9) {
  AbelianGroup g({9});
  std::vector<Index> img(9);
  for (Index x = 0; x < 9; ++x) img[x] = g.inv(x);
  std::vector<GroupMap> k{GroupMap(g, g, img)};
  auto a = cyclotomic(g, k);
  EXPECT_EQ(a.rank(), 5u);
  EXPECT_EQ(a.basic_set(1), (Class{1, 8}));
}

TEST(Cyclotomic, RejectsNonAutomorphisms) {
  AbelianGroup g({3, 9});
  std::vector<GroupMap> k{map_from_generator_images(g, std::vector<Index>{9, 0})};
  EXPECT_THROW(cyclotomic(g, k), InvalidArgument);
}

TEST(Table1, GeneratedOrdersMatchSizeColumn) {
  const std::array<std::size_t, 10> sizes{1, 2, 2, 4, 2, 2, 3, 6, 6, 6};
  for (int n : {2, 3}) {
    for (int i = 0; i < 10; ++i) {
      const auto gens = table1_generators(i, n);
      const auto k = generate_automorphism_group(gens.front().source(), gens);
      EXPECT_EQ(k.size(), sizes[i]) << "K" << i << " n=" << n;
      EXPECT_EQ(table1_rows()[i].size, sizes[i]);
    }
  }
}

TEST(Table1, RowsAreRegularWithTrivialRadical) {
  for (int n : {2, 3}) {
    for (int i = 0; i < 10; ++i) {
      const auto a = table1(i, n);
      EXPECT_TRUE(is_regular(a)) << "K" << i;
      EXPECT_EQ(ring_radical(a).size(), 1u) << "K" << i;
    }
  }
  EXPECT_EQ(table1(0, 2).rank(), 27u);
  EXPECT_THROW(table1(0, 1), InvalidArgument);
  EXPECT_THROW(table1(10, 2), InvalidArgument);
}

TEST(Table1, K6ClassSizes) {
  const auto a = table1(6, 2);
  for (const auto& c : a.classes()) EXPECT_TRUE(c.size() == 1 || c.size() == 3);
  // The quotient by C1 is an S-ring over a group of order 9.
  const auto& g = a.group();
  const Index c1 = g.index(Element{{0, 3}});
  const auto l = generated(g, std::vector<Index>{c1});
  ASSERT_TRUE(is_a_subgroup(a, l));
  const auto q = quotient_ring(a, SectionRef{whole_group(g), l});
  EXPECT_EQ(q.group().size(), 9u);
}

TEST(Table1, K6AndK7AreNotCayleyIsomorphic) {
  EXPECT_FALSE(cayley_isomorphic(table1(6, 2), table1(7, 2)).has_value());
  EXPECT_NE(table1(6, 2).rank(), table1(7, 2).rank());
}

TEST(Products, Tensor) {
  AbelianGroup z3({3});
  const auto zg = group_ring(z3);
  const auto t = trivial_sring(z3);
  EXPECT_EQ(tensor(zg, zg), group_ring(AbelianGroup({3, 3})));
  const auto a = tensor(t, zg);
  EXPECT_EQ(a.rank(), 6u);
  EXPECT_EQ(a.group().orders(), (std::vector<int>{3, 3}));
}

TEST(Products, Wreath) {
  AbelianGroup z3({3});
  const auto zg = group_ring(z3);
  const auto t = trivial_sring(z3);
  EXPECT_EQ(wreath(zg, zg).rank(), 5u);
  // Z C1 wr rank-2 over S: classes {e}, {c1}, {c1^2}, (S \ e) x C1.
  const auto w = wreath(zg, t);
  EXPECT_EQ(w.rank(), 4u);
  EXPECT_EQ(class_sizes(w), (std::vector<std::size_t>{1, 1, 1, 6}));
  for (const auto* a1 : {&zg, &t})
    for (const auto* a2 : {&zg, &t}) {
      EXPECT_EQ(wreath(*a1, *a2).rank(), a1->rank() + a2->rank() - 1);
      EXPECT_EQ(tensor(*a1, *a2).rank(), a1->rank() * a2->rank());
    }
}

TEST(GeneralizedWreath, Basics) {
  AbelianGroup z3({3});
  const auto w = wreath(group_ring(z3), group_ring(z3));
  const auto& g = w.group();
  const auto all = whole_group(g);
  const auto bottom = generated(g, std::vector<Index>{3});
  EXPECT_TRUE(is_generalized_wreath(w, all, bottom));
  EXPECT_TRUE(is_generalized_wreath(w, bottom, bottom));
  const auto secs = gw_sections(w);
  ASSERT_EQ(secs.size(), 1u);
  EXPECT_EQ(secs[0].u, bottom);
  EXPECT_EQ(secs[0].l, bottom);
  EXPECT_TRUE(gw_sections(group_ring(g)).empty());
  EXPECT_THROW(is_generalized_wreath(group_ring(g), bottom, all), InvalidArgument);
}
