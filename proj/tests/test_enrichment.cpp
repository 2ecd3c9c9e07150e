#include <gtest/gtest.h>

#include <set>

#include "pullback/balance.hpp"
#include "pullback/enrichment.hpp"
#include "pullback/error.hpp"
#include "support.hpp"

using namespace pullback;
using pullback::testing::b2;
using pullback::testing::cycle_d1;
using pullback::testing::fixture;
using pullback::testing::small_corpus;

namespace {

bool shares_edge(const CombinatorialMap& map, int edge, int f, int g) {
  const auto& e = map.edges()[edge];
  const int x = map.face_of(e[0]);
  const int y = map.face_of(e[1]);
  return (x == f && y == g) || (x == g && y == f);
}

void expect_perfect(const CombinatorialMap& map, const DotGraph& dg, const DotMatching& mt) {
  ASSERT_EQ(mt.pairs.size(), dg.dots_b.size());
  ASSERT_EQ(dg.dots_a.size(), dg.dots_b.size());
  std::set<int> used_a, used_b;
  for (const auto& p : mt.pairs) {
    EXPECT_TRUE(used_a.insert(p.dot_a).second);
    EXPECT_TRUE(used_b.insert(p.dot_b).second);
    EXPECT_TRUE(shares_edge(map, p.host_edge, dg.dots_a[p.dot_a].face, dg.dots_b[p.dot_b].face));
  }
}

}  // namespace

TEST(Enrichment, DotGraphOfB2) {
  const auto dg = dot_graph(b2(), alternating_coloring(b2()));
  EXPECT_EQ(dg.m, 2);
  EXPECT_EQ(dg.dots_per_face, (std::vector<int>{0, 0, 0, 0}));
  EXPECT_TRUE(hall_check(dg).ok);
  EXPECT_TRUE(perfect_matching(b2(), dg).pairs.empty());
}

TEST(Enrichment, DotGraphNeedsTwoCorners) {
  try {
    dot_graph(cycle_d1(), alternating_coloring(cycle_d1()));
    FAIL() << "expected PreconditionFailed";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PreconditionFailed);
  }
}

TEST(Enrichment, DotCountsAreCornerDeficits) {
  const auto m = fixture("mirror_12_34").map;
  const auto dg = dot_graph(m, alternating_coloring(m));
  EXPECT_EQ(dg.m, 4);
  int total = 0;
  for (int f = 0; f < m.face_count(); ++f) {
    std::set<int> corners;
    for (Dart x : m.faces()[f]) corners.insert(m.vertex_of(x));
    EXPECT_EQ(dg.dots_per_face[f], 4 - static_cast<int>(corners.size()));
    total += dg.dots_per_face[f];
  }
  EXPECT_EQ(static_cast<int>(dg.dots_a.size() + dg.dots_b.size()), total);
}

TEST(Enrichment, HallAgreesWithLocalBalance) {
  for (const auto& m : small_corpus()) {
    const auto c = alternating_coloring(m);
    const auto dg = dot_graph(m, c);
    const auto hall = hall_check(dg);
    EXPECT_EQ(hall.ok, check_balance(m).locally_balanced);
    if (hall.ok) {
      expect_perfect(m, dg, perfect_matching(m, dg));
    } else {
      EXPECT_LT(hall.neighbor_dots, hall.witness.size());
      EXPECT_THROW(perfect_matching(m, dg), Error);
    }
  }
}

TEST(Enrichment, WitnessBecomesCertificate) {
  int certified = 0;
  std::vector<CombinatorialMap> maps{fixture("counterexample_gb_not_lb").map};
  for (const auto& m : small_corpus()) maps.push_back(m);
  for (const auto& m : maps) {
    const auto c = alternating_coloring(m);
    const auto dg = dot_graph(m, c);
    const auto hall = hall_check(dg);
    if (hall.ok) continue;
    const auto cert = witness_region(m, dg, hall);
    ASSERT_TRUE(cert.has_value());
    EXPECT_TRUE(make_region(m, cert->coloring, cert->region.faces).has_value());
    EXPECT_LE(cert->region.a_faces, cert->region.b_faces);
    ++certified;
  }
  EXPECT_GE(certified, 2);
}

TEST(Enrichment, CounterexampleCertificate) {
  const auto doc = fixture("counterexample_gb_not_lb");
  const auto expected = nlohmann::json::parse(
      pullback::testing::read_file(std::string(FIXTURE_DIR) + "/counterexample_gb_not_lb.certificate.json"));
  const auto dg = dot_graph(doc.map, *doc.colors);
  const auto hall = hall_check(dg);
  ASSERT_FALSE(hall.ok);
  const auto cert = witness_region(doc.map, dg, hall);
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->region.faces, expected["faces"].get<std::vector<int>>());
  EXPECT_EQ(cert->region.a_faces, expected["a_faces"].get<int>());
  EXPECT_EQ(cert->region.b_faces, expected["b_faces"].get<int>());
  EXPECT_EQ(cert->coloring == doc.colors->flipped(), expected["flipped"].get<bool>());
}

TEST(Enrichment, SubdivideKeepsOriginalDarts) {
  const auto m = b2();
  const auto sub = subdivide(m, {1, 0, 2, 0});
  EXPECT_EQ(sub.dart_count(), 8 + 6);
  EXPECT_EQ(sub.vertex_count(), 2 + 3);
  EXPECT_EQ(sub.face_count(), 4);
  EXPECT_EQ(sub.genus(), 0);
  for (Dart x = 0; x < 8; ++x) {
    EXPECT_EQ(sub.sigma(x), m.sigma(x));
    EXPECT_EQ(sub.face_of(x), m.face_of(x));
    EXPECT_EQ(sub.vertex_of(x), m.vertex_of(x));
  }
  for (int v = 2; v < sub.vertex_count(); ++v) EXPECT_EQ(sub.valence(v), 2);
  EXPECT_EQ(subdivide(m, {0, 0, 0, 0}), m);
}

TEST(Enrichment, EnrichedFacesHaveMVertices) {
  for (const auto& m : small_corpus()) {
    const auto c = alternating_coloring(m);
    const auto dg = dot_graph(m, c);
    if (!hall_check(dg).ok) continue;
    const auto mt = perfect_matching(m, dg);
    const auto counts = subdivision_counts(m, mt);
    int total = 0;
    for (int k : counts) total += k;
    EXPECT_EQ(total, static_cast<int>(mt.pairs.size()));
    const auto e = enrich(m, mt);
    EXPECT_EQ(e.face_count(), m.face_count());
    EXPECT_EQ(e.genus(), m.genus());
    for (int f = 0; f < e.face_count(); ++f) EXPECT_EQ(e.face_length(f), dg.m);
  }
}
