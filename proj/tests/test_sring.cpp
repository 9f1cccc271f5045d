#include <gtest/gtest.h>

#include "schur/constructions.hpp"
#include "schur/enumerate.hpp"
#include "schur/groupring.hpp"

using namespace schur;

namespace {

Violation violation_of(const AbelianGroup& g, Partition p) {
  auto v = validate(g, std::move(p));
  EXPECT_TRUE(std::holds_alternative<Violation>(v));
  return std::get<Violation>(v);
}

std::int64_t direct_constant(const SRing& a, std::uint32_t x, std::uint32_t y, Index z) {
  std::int64_t c = 0;
  for (Index u : a.basic_set(x))
    for (Index v : a.basic_set(y)) c += a.group().mul(u, v) == z;
  return c;
}

}  // namespace

TEST(Validate, Violations) {
  AbelianGroup z9({9});
  EXPECT_EQ(violation_of(z9, {{0}, {1, 2}, {3, 4, 5, 6, 7}}).kind, Violation::Kind::NotPartition);
  EXPECT_EQ(violation_of(z9, {{0}, {1, 2}, {2, 3, 4, 5, 6, 7, 8}}).kind,
            Violation::Kind::NotPartition);
  EXPECT_EQ(violation_of(z9, {{0, 1}, {2, 3, 4, 5, 6, 7, 8}}).kind,
            Violation::Kind::IdentityNotAlone);
  EXPECT_EQ(violation_of(z9, {{0}, {1, 2}, {3, 4, 5, 6, 7, 8}}).kind,
            Violation::Kind::InverseClosure);

  // {1,6}^2 = 2e + 2 + 5 meets {2,3,4,5} with coefficients 1 and 0.
  AbelianGroup z7({7});
  auto v = violation_of(z7, {{0}, {1, 6}, {2, 3, 4, 5}});
  ASSERT_EQ(v.kind, Violation::Kind::ModuleClosure);
  ASSERT_TRUE(v.a && v.b);
  EXPECT_NE(v.coeff_a, v.coeff_b);
  auto counts = set_product_counts(z7, std::vector<Index>{1, 6}, std::vector<Index>{1, 6});
  EXPECT_EQ(counts[*v.a], v.coeff_a);
  EXPECT_EQ(counts[*v.b], v.coeff_b);
  EXPECT_THROW(make_sring(z7, {{0}, {1, 6}, {2, 3, 4, 5}}), ValidationError);
}

TEST(Validate, CanonicalForm) {
  AbelianGroup z7({7});
  auto a = make_sring(z7, {{6, 5, 3}, {4, 1, 2}, {0}});
  ASSERT_EQ(a.rank(), 3u);
  EXPECT_EQ(a.basic_set(0), (Class{0}));
  EXPECT_EQ(a.basic_set(1), (Class{1, 2, 4}));
  EXPECT_EQ(a.basic_set(2), (Class{3, 5, 6}));
  EXPECT_EQ(a.class_of(4), 1u);
  EXPECT_EQ(a.inverse_class(1), 2u);
}

TEST(StructureConstants, MatchDirectCounts) {
  AbelianGroup g({3, 9});
  for (int row : {0, 3, 6, 9}) {
    auto a = table1(row, 2);
    StructureConstants sc(a);
    for (std::uint32_t x = 0; x < a.rank(); ++x)
      for (std::uint32_t y = 0; y < a.rank(); ++y)
        for (std::uint32_t z = 0; z < a.rank(); ++z) {
          const auto d = direct_constant(a, x, y, a.basic_set(z).front());
          EXPECT_EQ(a.structure_constant(x, y, z), d);
          EXPECT_EQ(sc(z, x, y), d);
        }
  }
}

TEST(GroupRingElement, Arithmetic) {
  AbelianGroup z3({3});
  auto x = GroupRingElement::sum_of_set(z3, std::vector<Index>{1, 2});
  auto sq = x * x;  // 2e + a + a^2
  EXPECT_EQ(sq.coefficient(0), 2);
  EXPECT_EQ(sq.coefficient(1), 1);
  EXPECT_EQ((sq - x).coefficient(1), 0);
  EXPECT_TRUE((x - x).is_zero());
}

TEST(PowerSet, Basics) {
  AbelianGroup z9({9});
  EXPECT_EQ(power_set_p(z9, std::vector<Index>{1}, 3), (Class{3}));
  EXPECT_TRUE(power_set_p(z9, std::vector<Index>{1, 4, 7}, 3).empty());
  EXPECT_EQ(power_set_p(z9, std::vector<Index>{1, 2}, 3), (Class{3, 6}));
  EXPECT_THROW(power_set_p(z9, std::vector<Index>{1}, 2), InvalidArgument);
  EXPECT_THROW(power_set_p(z9, std::vector<Index>{1}, 9), InvalidArgument);
}

TEST(Rational, Conjugates) {
  AbelianGroup z9({9});
  EXPECT_EQ(coprime_residues(z9), (std::vector<int>{1, 2, 4, 5, 7, 8}));
  EXPECT_EQ(rational_conjugate(z9, std::vector<Index>{1, 8}, 2), (Class{2, 7}));
  EXPECT_TRUE(is_rational(z9, std::vector<Index>{3, 6}));
  EXPECT_FALSE(is_rational(z9, std::vector<Index>{1, 8}));
  EXPECT_TRUE(is_rational(trivial_sring(z9)));
  EXPECT_FALSE(is_rational(group_ring(z9)));
}

TEST(ASets, SubgroupsOfGroupRing) {
  AbelianGroup g({3, 9});
  EXPECT_EQ(a_subgroups(group_ring(g)).size(), g.subgroups().size());
  auto t = a_subgroups(trivial_sring(g));
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0].size(), 1u);
  EXPECT_EQ(t[1].size(), 27u);
}

TEST(Sections, RestrictAndQuotient) {
  AbelianGroup g({3, 9});
  const Index three[] = {3};
  const auto h = generated(g, three);  // order 3 inside the cyclic factor
  auto zg = group_ring(g);
  EXPECT_EQ(restrict(zg, h).rank(), 3u);
  EXPECT_EQ(quotient_ring(zg, {whole_group(g), h}).rank(), 9u);
  auto tr = trivial_sring(g);
  EXPECT_EQ(quotient_ring(tr, {whole_group(g), trivial_subgroup(g)}).rank(), 2u);
  EXPECT_THROW(restrict(tr, h), InvalidArgument);
  EXPECT_FALSE(is_a_section(tr, {whole_group(g), h}));
  for (const auto& a : enumerate_srings(g).rings)
    for (const auto& u : a_subgroups(a)) {
      auto r = restrict(a, u);
      EXPECT_EQ(r.group().size(), u.size());
      for (const auto& l : a_subgroups(a))
        if (l.is_subgroup_of(u)) EXPECT_EQ(quotient_ring(a, {u, l}).group().size(), u.size() / l.size());
    }
}

TEST(Radical, Examples) {
  AbelianGroup g({3, 9});
  EXPECT_EQ(ring_radical(group_ring(g)).size(), 1u);
  EXPECT_EQ(ring_radical(trivial_sring(g)).size(), 1u);
  auto w = wreath(trivial_sring(AbelianGroup({3})), trivial_sring(AbelianGroup({9})));
  EXPECT_GT(ring_radical(w).size(), 1u);
  EXPECT_TRUE(is_regular(group_ring(g)));
  EXPECT_FALSE(is_regular(trivial_sring(g)));
}

TEST(QuasiThin, Orthogonals) {
  AbelianGroup z3({3});
  EXPECT_TRUE(is_quasi_thin(group_ring(z3)));
  EXPECT_TRUE(orthogonals(group_ring(z3)).empty());
  AbelianGroup z22({2, 2});
  EXPECT_EQ(orthogonals(group_ring(z22)).size(), 0u);
  auto a = make_sring(z22, {{0}, {1, 2}, {3}});
  // {1,2}{1,2}^-1 = 2e + 3, so {3} is orthogonal.
  EXPECT_EQ(orthogonals(a), (std::vector<std::uint32_t>{2}));
  EXPECT_THROW(orthogonals(trivial_sring(AbelianGroup({3, 3}))), InvalidArgument);
}

TEST(Primitive, Examples) {
  EXPECT_TRUE(is_primitive(trivial_sring(AbelianGroup({9}))));
  EXPECT_FALSE(is_primitive(group_ring(AbelianGroup({9}))));
  EXPECT_TRUE(is_primitive(group_ring(AbelianGroup({3}))));
}

TEST(Family, Parameters) {
  auto f = three_group_family(AbelianGroup({3, 9}));
  EXPECT_FALSE(f.cyclic);
  EXPECT_EQ(f.n, 2);
  EXPECT_EQ(f.s, 9u);
  EXPECT_EQ(f.c, 1u);
  EXPECT_EQ(f.c1, 3u);
  EXPECT_TRUE(three_group_family(AbelianGroup({27})).cyclic);
  EXPECT_THROW(three_group_family(AbelianGroup({5, 5})), InvalidArgument);
  EXPECT_THROW(three_group_family(AbelianGroup({9, 9})), InvalidArgument);
}

TEST(Cayley, IsomorphismAndImages) {
  AbelianGroup g({3, 3});
  auto a = make_sring(g, {{0}, {1, 2}, {3, 4, 5, 6, 7, 8}});
  auto b = make_sring(g, {{0}, {3, 6}, {1, 2, 4, 5, 7, 8}});
  auto f = cayley_isomorphic(a, b);
  ASSERT_TRUE(f);
  EXPECT_EQ(image(a, *f), b);
  EXPECT_FALSE(cayley_isomorphic(a, trivial_sring(g)));
  EXPECT_THROW(cayley_isomorphic(a, group_ring(AbelianGroup({9}))), InvalidArgument);
}
