#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "schur/constructions.hpp"
#include "schur/enumerate.hpp"
#include "schur/schurity.hpp"

using namespace schur;

namespace {

// |Aut| of the Cayley scheme by running over all permutations of G.
std::size_t brute_aut_order(const SRing& a) {
  const auto s = cayley_scheme(a);
  const std::size_t n = s.degree();
  std::vector<Index> p(n);
  std::iota(p.begin(), p.end(), Index{0});
  std::size_t count = 0;
  do {
    bool ok = true;
    for (Index x = 0; x < n && ok; ++x)
      for (Index y = 0; y < n && ok; ++y) ok = s.color(p[x], p[y]) == s.color(x, y);
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST(Scheme, IntersectionNumbersAreStructureConstants) {
  for (int row : {0, 4, 9}) {
    auto a = table1(row, 2);
    auto s = cayley_scheme(a);
    EXPECT_EQ(s.rank(), a.rank());
    for (std::uint32_t r = 0; r < a.rank(); ++r) {
      EXPECT_EQ(s.transpose(r), a.inverse_class(r));
      for (std::uint32_t q = 0; q < a.rank(); ++q)
        for (std::uint32_t t = 0; t < a.rank(); ++t)
          EXPECT_EQ(s.intersection_number(r, q, t), a.structure_constant(r, q, t));
    }
  }
}

TEST(Automorphisms, GroupRingGivesTranslations) {
  for (auto orders : std::vector<std::vector<int>>{{3}, {3, 3}, {3, 9}, {2, 4}}) {
    AbelianGroup g(orders);
    auto r = scheme_automorphisms(group_ring(g));
    EXPECT_EQ(r.order, BigInt(g.size()));
    EXPECT_TRUE(two_equivalent(r.group, right_translations(g)));
  }
}

TEST(Automorphisms, RankTwoIsSymmetric) {
  auto r = scheme_automorphisms(trivial_sring(AbelianGroup({3, 9})));
  EXPECT_EQ(r.order, factorial(27));
  EXPECT_EQ(r.group.point_stabilizer(0).order(), factorial(26));
}

TEST(Automorphisms, MatchBruteForceOnSmallGroups) {
  for (auto orders : std::vector<std::vector<int>>{{4}, {2, 2}, {6}, {7}, {8}, {2, 4}, {2, 2, 2}, {9}, {3, 3}}) {
    AbelianGroup g(orders);
    for (const auto& a : enumerate_srings(g).rings) {
      auto r = scheme_automorphisms(a);
      EXPECT_EQ(r.order, BigInt(brute_aut_order(a))) << g.to_string() << " rank " << a.rank();
      const auto s = cayley_scheme(a);
      for (const auto& p : r.group.generators()) EXPECT_TRUE(preserves_colors(s, p));
    }
  }
}

TEST(Automorphisms, BudgetIsEnforced) {
  SearchOptions opt;
  opt.search_budget = 2;
  EXPECT_THROW(scheme_automorphisms(table1(9, 2), opt), BudgetExceeded);
  opt = {};
  opt.max_order = 20;
  EXPECT_THROW(scheme_automorphisms(group_ring(AbelianGroup({3, 9})), opt), BudgetExceeded);
}

TEST(Schurity, TableOneRingsAreSchurian) {
  for (int row = 0; row < 10; ++row) {
    auto r = is_schurian(table1(row, 2));
    EXPECT_TRUE(r.schurian) << row;
    EXPECT_FALSE(r.split_class);
  }
}

TEST(Schurity, CyclotomicRingsAreSchurian) {
  AbelianGroup g({3, 3});
  const auto& aut = g.automorphisms();
  for (std::size_t i = 0; i < aut.size(); i += 5) {
    const GroupMap k[] = {aut[i]};
    EXPECT_TRUE(is_schurian(cyclotomic(g, k)).schurian);
  }
}

TEST(Schurity, NonSchurianWitnessOverZ5xZ5) {
  AbelianGroup g({5, 5});
  std::size_t found = 0;
  for (const auto& a : enumerate_srings(g).rings) {
    auto r = is_schurian(a);
    if (r.schurian) continue;
    ++found;
    ASSERT_TRUE(r.split_class && r.witness);
    EXPECT_TRUE(verify_split_witness(a, r));
    // Dropping the generators makes every orbit a point, so a pair from one
    // true orbit would look split; the backtrack must refuse it.
    PermGroup stab(g.size(), r.stabilizer_generators);
    const auto orbit = stab.orbit_labels();
    for (const auto& c : a.classes())
      for (Index y : c)
        if (y != c.front() && orbit[y] == orbit[c.front()]) {
          auto tampered = r;
          tampered.stabilizer_generators.clear();
          tampered.split_class = a.class_of(y);
          tampered.witness = std::pair{c.front(), y};
          EXPECT_FALSE(verify_split_witness(a, tampered));
          break;
        }
    auto swapped = r;
    swapped.witness = std::pair{r.witness->first, r.witness->first};
    EXPECT_FALSE(verify_split_witness(a, swapped));
    if (found >= 3) break;
  }
  EXPECT_GT(found, 0u);
}

TEST(Schurity, GeneralizedWreathCertificate) {
  AbelianGroup g({3, 9});
  auto w = wreath(trivial_sring(AbelianGroup({3})), trivial_sring(AbelianGroup({9})));
  const auto sections = gw_sections(w);
  ASSERT_FALSE(sections.empty());
  auto c = genwr_certificate(w, sections.front().u, sections.front().l);
  EXPECT_TRUE(c.is_gw);
  EXPECT_TRUE(c.u_schurian);
  EXPECT_TRUE(c.quotient_schurian);
  EXPECT_TRUE(c.schurian);
}
