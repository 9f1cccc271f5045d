#include <gtest/gtest.h>

#include "schur/constructions.hpp"
#include "schur/io.hpp"

using namespace schur;

TEST(Json, RoundTripIsByteIdentical) {
  for (auto orders : std::vector<std::vector<int>>{{3, 3}, {2, 4}, {9}}) {
    AbelianGroup g(orders);
    const auto rings = enumerate_srings(g).rings;
    for (const auto& a : rings) {
      const auto text = serialize_ring(a);
      const auto back = parse_ring(text);
      EXPECT_EQ(back, a);
      EXPECT_EQ(serialize_ring(back), text);
    }
    EnumerationDocument doc{g, rings, {}, "", {}};
    const auto dumped = enumeration_to_json(doc).dump(2);
    EXPECT_EQ(parse_rings(dumped), rings);
  }
}

TEST(Json, CanonicalLayout) {
  const auto a = group_ring(AbelianGroup({3}));
  EXPECT_EQ(serialize_ring(a), R"({"group":[3],"classes":[[[0]],[[1]],[[2]]]})");
  // Input order does not matter; output is canonical.
  const auto b = parse_ring(R"({"group":[3,3],"classes":[[[2,2],[1,1]],[[0,0]],[[2,1],[1,2],[0,1],[0,2],[1,0],[2,0]]]})");
  EXPECT_EQ(serialize_ring(b),
            R"({"group":[3,3],"classes":[[[0,0]],[[0,1],[0,2],[1,0],[1,2],[2,0],[2,1]],[[1,1],[2,2]]]})");
}

TEST(Json, MalformedInput) {
  EXPECT_THROW(parse_ring("{"), MalformedInput);
  EXPECT_THROW(parse_ring(R"({"group":[3]})"), MalformedInput);
  EXPECT_THROW(parse_ring(R"({"group":[3],"classes":[[[0]],[[1],[3]]]})"), MalformedInput);
  EXPECT_THROW(parse_ring(R"({"group":[3],"classes":[[[0]],[[1,0],[2]]]})"), MalformedInput);
  EXPECT_THROW(parse_ring(R"({"group":[-3],"classes":[]})"), MalformedInput);
  EXPECT_THROW(parse_ring(R"({"group":"3","classes":[]})"), MalformedInput);
  EXPECT_THROW(parse_rings(R"([{"group":[3],"classes":[[[0]],[[1],[2]]]},{"group":[2],"classes":[[[0]],[[1]]]}])"),
               MalformedInput);
  EXPECT_THROW(parse_rings("17"), MalformedInput);
}

TEST(Json, ValidationFailure) {
  // {1,2} is not inverse closed in Z_9.
  EXPECT_THROW(parse_ring(R"({"group":[9],"classes":[[[0]],[[1],[2]],[[3],[4],[5],[6],[7],[8]]]})"),
               ValidationError);
  // e not alone.
  EXPECT_THROW(parse_ring(R"({"group":[3],"classes":[[[0],[1],[2]]]})"), ValidationError);
}

TEST(Json, AcceptsEnumerateOutputAndArrays) {
  const auto a = trivial_sring(AbelianGroup({5}));
  const auto b = group_ring(AbelianGroup({5}));
  const auto arr = "[" + serialize_ring(a) + "," + serialize_ring(b) + "]";
  EXPECT_EQ(parse_rings(arr).size(), 2u);
  EXPECT_EQ(parse_rings(R"({"rings":)" + arr + "}").size(), 2u);
}

TEST(Json, ReportSchema) {
  const auto j = report_to_json({{"oracle-equivalence", ClaimStatus::Pass, "ok", 0.5},
                                 {"schurian-n3", ClaimStatus::Budget, "time limit exceeded", 1.0}});
  ASSERT_EQ(j["claims"].size(), 2u);
  EXPECT_EQ(j["claims"][0]["status"], "pass");
  EXPECT_EQ(j["claims"][1]["status"], "budget");
  EXPECT_EQ(j["claims"][1]["id"], "schurian-n3");
  EXPECT_DOUBLE_EQ(j["claims"][0]["seconds"].get<double>(), 0.5);
}
