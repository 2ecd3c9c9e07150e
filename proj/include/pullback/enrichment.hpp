#pragma once

#include <optional>
#include <vector>

#include "pullback/balance.hpp"
#include "pullback/surface_map.hpp"

namespace pullback {

struct Dot {
  int face = 0;
  int index = 0;  // 0-based position among the dots of its face

  friend bool operator==(const Dot&, const Dot&) = default;
};

/// Dots placed in the faces of a globally balanced map, face F carrying m - e_F
/// of them. An A dot and a B dot are adjacent iff their faces share an edge.
struct DotGraph {
  int m = 0;                            // corner count of the map
  FaceColoring coloring;
  std::vector<int> dots_per_face;       // by face id
  std::vector<Dot> dots_a, dots_b;      // sorted by (face, index)
  std::vector<std::vector<int>> face_neighbors;  // sorted, multiplicity collapsed
  std::vector<std::vector<int>> adjacency;       // B dot -> adjacent A dots, ascending
};

/// Throws PreconditionFailed when the map has fewer than two corners and
/// NegativeDotCount if some face meets more than m corners.
DotGraph dot_graph(const CombinatorialMap& map, const FaceColoring& coloring);

/// Outcome of the Hall test on the B side. On failure `witness` is a set S of B
/// dots with fewer than |S| neighbours, closed under taking whole faces.
struct HallResult {
  bool ok = false;
  std::vector<int> witness;           // B dot indices
  std::vector<int> witness_faces;     // B faces carrying the witness dots
  std::vector<int> neighbor_faces;    // A faces adjacent to those faces
  std::size_t neighbor_dots = 0;
};

HallResult hall_check(const DotGraph& dg);

struct MatchedPair {
  int dot_a = 0;    // index into dots_a
  int dot_b = 0;    // index into dots_b
  int host_edge = 0;
};

struct DotMatching {
  std::vector<MatchedPair> pairs;  // sorted by dot_b
};

/// Perfect matching by augmenting paths in canonical dot order. Pairs joining the
/// same two faces are spread round-robin over the edges those faces share.
/// Throws NoPerfectMatching when none exists.
DotMatching perfect_matching(const CombinatorialMap& map, const DotGraph& dg);

/// Number of subdivision points each edge receives from a matching.
std::vector<int> subdivision_counts(const CombinatorialMap& map, const DotMatching& matching);

/// Inserts `counts[e]` new 2-valent vertices on every edge e. Original darts keep
/// their numbers, so face and original vertex ids are unchanged.
CombinatorialMap subdivide(const CombinatorialMap& map, const std::vector<int>& counts);

CombinatorialMap enrich(const CombinatorialMap& map, const DotMatching& matching);

struct RegionCertificate {
  Region region;
  FaceColoring coloring;  // the coloring the region is positive for
};

/// Turns a Hall witness into a local balance certificate: a positive region
/// (for `dg.coloring` or its flip) with no more A than B faces.
std::optional<RegionCertificate> witness_region(const CombinatorialMap& map, const DotGraph& dg,
                                     const HallResult& hall);

}  // namespace pullback
