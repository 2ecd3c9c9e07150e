#include <gtest/gtest.h>

#include "pullback/enrichment.hpp"
#include "pullback/error.hpp"
#include "pullback/labeling.hpp"
#include "pullback/monodromy.hpp"
#include "support.hpp"

using namespace pullback;
using pullback::testing::b2;
using pullback::testing::cycle_d1;
using pullback::testing::fixture;
using pullback::testing::small_corpus;

TEST(Labeling, B2) {
  const auto c = alternating_coloring(b2());
  const auto lab = admissible_labeling(b2(), c);
  EXPECT_EQ(lab.m, 2);
  EXPECT_EQ(lab.label, (std::vector<int>{1, 2}));
  EXPECT_TRUE(verify_labeling(b2(), c, lab).ok);
  EXPECT_EQ(passport_of(b2(), lab), (Passport{2, {{2}, {2}}}));
}

TEST(Labeling, CycleHasTwoLabels) {
  const auto c = alternating_coloring(cycle_d1());
  const auto lab = admissible_labeling(cycle_d1(), c);
  EXPECT_EQ(lab.label, (std::vector<int>{1, 2}));
  EXPECT_EQ(passport_of(cycle_d1(), lab), (Passport{1, {{1}, {1}}}));
}

TEST(Labeling, VerifyRejectsBrokenLabelings) {
  const auto c = alternating_coloring(b2());
  EXPECT_FALSE(verify_labeling(b2(), c, {2, {1, 1}}).ok);
  EXPECT_FALSE(verify_labeling(b2(), c, {3, {1, 2}}).ok);
}

TEST(Labeling, UnequalFacesCannotPropagate) {
  const auto doc = fixture("counterexample_gb_not_lb");
  try {
    admissible_labeling(doc.map, *doc.colors);
    FAIL() << "expected InconsistentPropagation";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InconsistentPropagation);
  }
}

TEST(Labeling, CompressRemovesDummyClass) {
  const auto c = alternating_coloring(b2());
  // One new vertex on every edge running from label 2 back to label 1.
  const auto counts = counts_from_labels(b2(), c, 3, {0, 1});
  EXPECT_EQ(counts, (std::vector<int>{0, 1, 0, 1}));
  const auto sub = subdivide(b2(), counts);
  const auto lab = admissible_labeling(sub, c);
  EXPECT_EQ(lab.m, 3);
  EXPECT_EQ(lab.label, (std::vector<int>{1, 2, 3, 3}));
  EXPECT_TRUE(verify_labeling(sub, c, lab).ok);
  const auto small = compress_labels(sub, c, lab);
  EXPECT_EQ(small.labeling.m, 2);
  EXPECT_TRUE(are_isomorphic(small.map, b2()));
  EXPECT_TRUE(verify_labeling(small.map, small.coloring, small.labeling).ok);
}

TEST(Labeling, CompressNeedsACorner) {
  const auto c = alternating_coloring(cycle_d1());
  EXPECT_THROW(compress_labels(cycle_d1(), c, admissible_labeling(cycle_d1(), c)), Error);
}

TEST(Labeling, RealizeCorpus) {
  for (const auto& m : small_corpus()) {
    const auto c = alternating_coloring(m);
    if (!hall_check(dot_graph(m, c)).ok) {
      EXPECT_THROW(realize(m, c), Error);
      continue;
    }
    const auto r = realize(m, c);
    EXPECT_TRUE(verify_labeling(r.enriched, r.coloring, r.labeling).ok);
    EXPECT_EQ(r.labeling.m, static_cast<int>(m.corners().size()));
    EXPECT_EQ(r.enriched.genus(), m.genus());
    const auto con = constellation_from(r.enriched, r.coloring, r.labeling);
    EXPECT_TRUE(verify_constellation(con, passport_of(r.enriched, r.labeling)).ok());
  }
}

TEST(Labeling, LabelSearchMatchesMatching) {
  for (const auto& m : small_corpus()) {
    const auto c = alternating_coloring(m);
    const int corners = static_cast<int>(m.corners().size());
    const auto labels = search_vertex_labels(m, c, corners, false);
    EXPECT_EQ(labels.has_value(), hall_check(dot_graph(m, c)).ok);
    if (!labels) continue;
    const auto sub = subdivide(m, counts_from_labels(m, c, corners, *labels));
    for (int f = 0; f < sub.face_count(); ++f) EXPECT_EQ(sub.face_length(f), corners);
  }
}

TEST(Labeling, GenericLabeling) {
  const auto m = fixture("mirror_12_34").map;
  const auto r = generic_labeling(m, alternating_coloring(m));
  EXPECT_EQ(r.labeling.m, 4);
  std::vector<int> corner_labels;
  for (int v = 0; v < r.enriched.vertex_count(); ++v) {
    if (r.enriched.is_corner(v)) corner_labels.push_back(r.labeling.label[v]);
  }
  std::sort(corner_labels.begin(), corner_labels.end());
  EXPECT_EQ(corner_labels, (std::vector<int>{1, 2, 3, 4}));
  EXPECT_TRUE(verify_labeling(r.enriched, r.coloring, r.labeling).ok);
}
