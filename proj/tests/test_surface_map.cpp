#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "pullback/error.hpp"
#include "pullback/monodromy.hpp"
#include "pullback/real_combinatorics.hpp"
#include "support.hpp"

using namespace pullback;
using pullback::testing::b2;
using pullback::testing::cycle_d1;
using pullback::testing::fixture;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::ParseError;
}

}  // namespace

TEST(Permutation, ComposesLeftToRight) {
  const Perm a{1, 0, 2};  // (1 2)
  const Perm b{0, 2, 1};  // (2 3)
  EXPECT_EQ(then(a, b), (Perm{2, 0, 1}));
  EXPECT_EQ(cycle_string(then(a, b)), "(1 3 2)");
  EXPECT_EQ(cycle_string(identity_perm(3)), "()");
  EXPECT_EQ(cycle_type(Perm{1, 0, 2}), (std::vector<int>{2, 1}));
  EXPECT_EQ(inverse(Perm{1, 2, 0}), (Perm{2, 0, 1}));
  EXPECT_FALSE(is_permutation(Perm{0, 0}));
}

TEST(SurfaceMap, CycleMap) {
  const auto m = cycle_d1();
  EXPECT_EQ(m.vertex_count(), 2);
  EXPECT_EQ(m.edge_count(), 2);
  EXPECT_EQ(m.face_count(), 2);
  EXPECT_EQ(m.genus(), 0);
  for (int f = 0; f < 2; ++f) EXPECT_EQ(m.face_length(f), 2);
}

TEST(SurfaceMap, B2FacesAreFourBigons) {
  const auto m = b2();
  EXPECT_EQ(m.vertex_count(), 2);
  EXPECT_EQ(m.edge_count(), 4);
  EXPECT_EQ(m.genus(), 0);
  const std::vector<std::vector<Dart>> faces{{0, 7}, {1, 2}, {3, 4}, {5, 6}};
  EXPECT_EQ(m.faces(), faces);
}

TEST(SurfaceMap, FaceTraversalFollowsPhi) {
  const auto m = b2();
  for (const auto& face : m.faces()) {
    for (std::size_t i = 0; i < face.size(); ++i) {
      EXPECT_EQ(m.phi(face[i]), face[(i + 1) % face.size()]);
    }
  }
}

TEST(SurfaceMap, RejectsInvalidPermutations) {
  EXPECT_EQ(kind_of([] { CombinatorialMap::build({0, 1}, {1, 0}); }), ErrorKind::NotInvolution);
  EXPECT_EQ(kind_of([] { CombinatorialMap::build({1, 2, 0, 3}, {0, 1, 2, 3}); }),
            ErrorKind::NotInvolution);
  EXPECT_EQ(kind_of([] { CombinatorialMap::build({1, 0}, {0, 0}); }), ErrorKind::BadPermutation);
  EXPECT_EQ(kind_of([] { CombinatorialMap::build({1, 0, 3}, {0, 1, 2}); }),
            ErrorKind::BadPermutation);
  EXPECT_EQ(kind_of([] { CombinatorialMap::build({1, 0, 3, 2}, {1, 0, 3, 2}); }),
            ErrorKind::Disconnected);
}

TEST(SurfaceMap, TorusT1) {
  const auto t1 = fixture("t1").map;
  EXPECT_EQ(t1.vertex_count(), 4);
  EXPECT_EQ(t1.edge_count(), 8);
  EXPECT_EQ(t1.face_count(), 4);
  EXPECT_EQ(t1.genus(), 1);
}

TEST(SurfaceMap, AlternatingColoring) {
  const auto c = alternating_coloring(b2());
  EXPECT_EQ(c.colors, (std::vector<Color>{Color::A, Color::B, Color::A, Color::B}));
  EXPECT_TRUE(is_proper_coloring(b2(), c));
  EXPECT_TRUE(is_proper_coloring(b2(), c.flipped()));
  const auto d1 = alternating_coloring(cycle_d1());
  EXPECT_EQ(d1.colors, (std::vector<Color>{Color::A, Color::B}));
}

TEST(SurfaceMap, TetrahedronHasNoAlternatingColoring) {
  const auto tet = fixture("tetrahedron").map;
  EXPECT_EQ(tet.face_count(), 4);
  EXPECT_EQ(kind_of([&] { alternating_coloring(tet); }), ErrorKind::NotBipartiteFaces);
}

TEST(SurfaceMap, OnlyTwoProperColorings) {
  for (const auto& m : {b2(), cycle_d1(), fixture("t1").map, fixture("mirror_12_34").map}) {
    const int nf = m.face_count();
    int proper = 0;
    for (int mask = 0; mask < (1 << nf); ++mask) {
      FaceColoring c;
      for (int f = 0; f < nf; ++f) c.colors.push_back((mask >> f) & 1 ? Color::B : Color::A);
      if (is_proper_coloring(m, c)) {
        ++proper;
        const auto alt = alternating_coloring(m);
        EXPECT_TRUE(c == alt || c == alt.flipped());
      }
    }
    EXPECT_EQ(proper, 2);
  }
}

TEST(SurfaceMap, FaceAdjacencyKeepsParallelArcs) {
  EXPECT_EQ(face_adjacency(b2()).arcs.size(), 4u);
  const auto d1 = face_adjacency(cycle_d1());
  ASSERT_EQ(d1.arcs.size(), 2u);
  for (const auto& arc : d1.arcs) EXPECT_NE(arc.face_a, arc.face_b);
  const auto mirror = fixture("mirror_12_34").map;
  EXPECT_EQ(mirror.face_count(), 6);
  EXPECT_EQ(face_adjacency(mirror).arcs.size(), 8u);
}

TEST(SurfaceMap, ColorableMapsHaveEvenValences) {
  std::vector<CombinatorialMap> maps{b2(), cycle_d1(), fixture("t1").map};
  for (int d = 2; d <= 4; ++d) {
    for (const auto& t : compositions(d)) {
      for (const auto& p : enumerate_pairings(t)) maps.push_back(mirror_graph(p).map);
    }
  }
  for (const auto& c : all_constellations(3, 3)) maps.push_back(pullback_from_constellation(c).map);
  for (const auto& m : maps) {
    alternating_coloring(m);
    for (int v = 0; v < m.vertex_count(); ++v) EXPECT_EQ(m.valence(v) % 2, 0);
    EXPECT_EQ((m.euler_characteristic() % 2 + 2) % 2, 0);
  }
}

TEST(SurfaceMap, CanonicalFormIgnoresDartNumbering) {
  std::mt19937 rng(5);
  const auto t1 = fixture("t1").map;
  const auto base = canonical_form(t1).map;
  for (int trial = 0; trial < 20; ++trial) {
    Perm r = identity_perm(t1.dart_count());
    std::shuffle(r.begin(), r.end(), rng);
    const auto moved = relabeled(t1, r);
    EXPECT_EQ(canonical_form(moved).map, base);
    EXPECT_TRUE(are_isomorphic(moved, t1));
  }
  EXPECT_FALSE(are_isomorphic(b2(), t1));
}

TEST(SurfaceMap, MarkedIsomorphism) {
  const auto m = b2();
  EXPECT_TRUE(are_isomorphic_marked(m, 0, m, 2));
  EXPECT_TRUE(are_isomorphic_marked(m, 0, m, 0));
  const auto rel = relabel_from(m, 3);
  EXPECT_TRUE(are_isomorphic_marked(m, 3, rel.map, 0));
}
