#include <gtest/gtest.h>

#include "pullback/balance.hpp"
#include "pullback/error.hpp"
#include "pullback/real_combinatorics.hpp"
#include "support.hpp"

using namespace pullback;
using pullback::testing::b2;
using pullback::testing::cycle_d1;
using pullback::testing::fixture;
using pullback::testing::small_corpus;

namespace {

// Positive regions straight from the definition, over all face subsets.
std::vector<std::vector<int>> brute_force_regions(const CombinatorialMap& map,
                                                  const FaceColoring& coloring) {
  const int nf = map.face_count();
  std::vector<std::vector<int>> out;
  for (int mask = 1; mask + 1 < (1 << nf); ++mask) {
    const auto in = [&](int f) { return (mask >> f) & 1; };
    bool ok = true;
    std::vector<int> degree(map.vertex_count(), 0);
    std::vector<int> parent(nf);
    for (int f = 0; f < nf; ++f) parent[f] = f;
    const auto find = [&](int f) {
      while (parent[f] != f) f = parent[f] = parent[parent[f]];
      return f;
    };
    for (const auto& e : map.edges()) {
      const int fx = map.face_of(e[0]);
      const int fy = map.face_of(e[1]);
      if (in(fx) && in(fy)) {
        parent[find(fx)] = find(fy);
      } else if (in(fx) != in(fy)) {
        ok = ok && coloring[in(fx) ? fx : fy] == Color::A;
        ++degree[map.vertex_of(e[0])];
        ++degree[map.vertex_of(e[1])];
      }
    }
    for (int deg : degree) ok = ok && (deg == 0 || deg == 2);
    std::vector<int> faces;
    for (int f = 0; f < nf; ++f) {
      if (in(f)) faces.push_back(f);
    }
    for (int f : faces) ok = ok && find(f) == find(faces.front());
    if (ok) out.push_back(faces);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool brute_force_locally_balanced(const CombinatorialMap& map) {
  const auto c = alternating_coloring(map);
  for (const auto& col : {c, c.flipped()}) {
    for (const auto& faces : brute_force_regions(map, col)) {
      int a = 0;
      for (int f : faces) a += col[f] == Color::A;
      if (2 * a <= static_cast<int>(faces.size())) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> face_lists(const std::vector<Region>& regions) {
  std::vector<std::vector<int>> out;
  for (const auto& r : regions) out.push_back(r.faces);
  return out;
}

}  // namespace

TEST(Balance, B2IsBalanced) {
  const auto report = check_balance(b2());
  EXPECT_TRUE(report.globally_balanced);
  EXPECT_TRUE(report.locally_balanced);
  EXPECT_EQ(report.d, 2);
  EXPECT_EQ(report.defect, StructuralDefect::None);
}

TEST(Balance, B2Regions) {
  const auto c = alternating_coloring(b2());
  const auto regions = positive_regions(b2(), c);
  EXPECT_EQ(face_lists(regions),
            (std::vector<std::vector<int>>{{0}, {0, 1, 2}, {0, 2, 3}, {2}}));
  EXPECT_EQ(regions[0].boundary_edges.size(), 2u);
  EXPECT_EQ(regions[1].a_faces, 2);
  EXPECT_EQ(regions[1].b_faces, 1);
  for (const auto& r : regions) {
    std::size_t darts = 0;
    for (const auto& cyc : r.boundary_cycles) {
      darts += cyc.size();
      for (Dart x : cyc) EXPECT_EQ(c[b2().face_of(x)], Color::A);
    }
    EXPECT_EQ(darts, r.boundary_edges.size());
  }
}

TEST(Balance, CycleWithoutCornersIsBalanced) {
  const auto report = check_balance(cycle_d1());
  EXPECT_TRUE(report.globally_balanced);
  EXPECT_TRUE(report.locally_balanced);
  EXPECT_EQ(report.d, 1);
}

TEST(Balance, StructuralDefects) {
  EXPECT_EQ(is_globally_balanced(fixture("tetrahedron").map).defect,
            StructuralDefect::NotColorable);
  // One vertex with a single loop: two monogon faces.
  const auto loop = CombinatorialMap::build({1, 0}, {1, 0});
  EXPECT_EQ(is_globally_balanced(loop).defect, StructuralDefect::Loop);
  // Three parallel edges between two vertices: faces split 2 against 1.
  const auto theta = CombinatorialMap::build({1, 0, 3, 2, 5, 4}, {2, 5, 4, 1, 0, 3});
  EXPECT_EQ(theta.face_count(), 3);
  EXPECT_EQ(is_globally_balanced(theta).defect, StructuralDefect::NotColorable);
}

TEST(Balance, RepeatedCornerIncidence) {
  // Both vertices rotate the same way: a torus with two faces, each meeting
  // every corner twice.
  const auto m = CombinatorialMap::build({1, 0, 3, 2, 5, 4, 7, 6}, {2, 3, 4, 5, 6, 7, 0, 1});
  EXPECT_EQ(m.genus(), 1);
  EXPECT_EQ(is_globally_balanced(m).defect, StructuralDefect::RepeatedCornerIncidence);
  for (const auto& c : small_corpus()) EXPECT_EQ(is_globally_balanced(c).defect, StructuralDefect::None);
}

TEST(Balance, CounterexampleIsOnlyGloballyBalanced) {
  const auto doc = fixture("counterexample_gb_not_lb");
  const auto report = check_balance(doc.map);
  EXPECT_TRUE(report.globally_balanced);
  EXPECT_FALSE(report.locally_balanced);
  ASSERT_TRUE(report.violation.has_value());
  EXPECT_LE(report.violation->a_faces, report.violation->b_faces);
  EXPECT_EQ(report.violation->faces, (std::vector<int>{0, 1, 2, 4}));
  EXPECT_TRUE(make_region(doc.map, *report.violation_coloring, report.violation->faces));
}

TEST(Balance, RegionsMatchBruteForce) {
  std::vector<CombinatorialMap> maps{b2(), cycle_d1(), fixture("t1").map,
                                     fixture("mirror_12_34").map,
                                     fixture("counterexample_gb_not_lb").map};
  for (const auto& m : balanced_corpus()) maps.push_back(m);
  for (const auto& m : maps) {
    const auto c = alternating_coloring(m);
    for (const auto& col : {c, c.flipped()}) {
      EXPECT_EQ(face_lists(positive_regions(m, col)), brute_force_regions(m, col));
    }
    EXPECT_EQ(check_balance(m).locally_balanced, brute_force_locally_balanced(m));
  }
}

TEST(Balance, ComplementOfRegionIsRegionForFlip) {
  for (const auto& m : small_corpus()) {
    const auto c = alternating_coloring(m);
    for (const auto& r : positive_regions(m, c)) {
      std::vector<int> rest;
      for (int f = 0; f < m.face_count(); ++f) {
        if (!std::binary_search(r.faces.begin(), r.faces.end(), f)) rest.push_back(f);
      }
      // The complement is positive for the flip only when it is connected.
      if (auto comp = make_region(m, c.flipped(), rest)) {
        EXPECT_EQ(comp->boundary_edges, r.boundary_edges);
        EXPECT_EQ(comp->a_faces, static_cast<int>(m.face_count()) / 2 - r.b_faces);
      }
    }
  }
}

TEST(Balance, ThurstonAgreesOnPlanarMaps) {
  int checked = 0;
  for (const auto& m : small_corpus()) {
    if (m.genus() != 0) continue;
    const auto c = alternating_coloring(m);
    EXPECT_EQ(thurston_locally_balanced(m, c), check_balance(m).locally_balanced);
    ++checked;
  }
  EXPECT_GT(checked, 10);
  const auto cx = fixture("counterexample_gb_not_lb").map;
  EXPECT_FALSE(thurston_locally_balanced(cx, alternating_coloring(cx)));
}

TEST(Balance, BothColoringsAgree) {
  for (const auto& m : small_corpus()) {
    const auto c = alternating_coloring(m);
    EXPECT_EQ(is_locally_balanced(m, c).locally_balanced,
              is_locally_balanced(m, c.flipped()).locally_balanced);
  }
}

TEST(Balance, CornerBound) {
  EXPECT_TRUE(corner_bound_check(b2()));
  EXPECT_TRUE(corner_bound_check(fixture("t1").map));
  for (const auto& m : small_corpus()) EXPECT_TRUE(corner_bound_check(m));
}

TEST(Balance, GenericThurston) {
  EXPECT_TRUE(is_generic_thurston(b2()));
  EXPECT_FALSE(is_generic_thurston(cycle_d1()));
  EXPECT_FALSE(is_generic_thurston(fixture("t1").map));
  EXPECT_TRUE(is_generic_thurston(fixture("mirror_12_34").map));
  // Two 6-valent points: d = 3 but only two vertices.
  EXPECT_FALSE(is_generic_thurston(mirror_graph({{3, {2, 2}}, {{1, 2}, {1, 2}}}).map));
}

TEST(Balance, RegionLimit) {
  const auto c = alternating_coloring(b2());
  try {
    positive_regions(b2(), c, {.max_regions = 1});
    FAIL() << "expected SizeLimitExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeLimitExceeded);
  }
}
