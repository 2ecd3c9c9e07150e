#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pullback/surface_map.hpp"

namespace pullback {

/// Vertex labels in 1..m, indexed by vertex id.
struct VertexLabeling {
  int m = 0;
  std::vector<int> label;

  friend bool operator==(const VertexLabeling&, const VertexLabeling&) = default;
};

struct LabelingCheck {
  bool ok = false;
  std::string reason;  // first violation
};

/// Propagates labels along A-oriented edges (head = tail + 1 mod m) starting with
/// label 1 at the vertex of dart 0, where m is the common face length.
/// Throws InconsistentPropagation when the constraints close up inconsistently or
/// faces differ in length, and re-verifies the result.
VertexLabeling admissible_labeling(const CombinatorialMap& map, const FaceColoring& coloring);

/// Labels 1..m read once each, increasing around every A face and decreasing
/// around every B face; each label class has half-valence sum d.
LabelingCheck verify_labeling(const CombinatorialMap& map, const FaceColoring& coloring,
                              const VertexLabeling& lab);

/// parts[j] lists valence/2 over the vertices labeled j+1, in decreasing order.
struct Passport {
  int d = 0;
  std::vector<std::vector<int>> parts;

  friend bool operator==(const Passport&, const Passport&) = default;
};

Passport passport_of(const CombinatorialMap& map, const VertexLabeling& lab);

struct LabeledMap {
  CombinatorialMap map;
  FaceColoring coloring;
  VertexLabeling labeling;
};

/// Deletes every label class made only of 2-valent vertices and renumbers the
/// remaining labels 1..m' in order. Surviving darts keep their relative order.
/// Throws PreconditionFailed when the map has no corner.
LabeledMap compress_labels(const CombinatorialMap& map, const FaceColoring& coloring,
                           const VertexLabeling& lab);

/// Vertex labels in 0..m-1 for the unsubdivided map, such that putting
/// (l(head) - l(tail) - 1) mod m new vertices on each A-oriented edge gives every
/// face exactly m vertices. With `distinct_corners` corners get pairwise
/// different labels. The vertex of dart 0 gets label 0.
std::optional<std::vector<int>> search_vertex_labels(const CombinatorialMap& map,
                                                     const FaceColoring& coloring, int m,
                                                     bool distinct_corners);

/// Subdivision counts induced by vertex labels as above.
std::vector<int> counts_from_labels(const CombinatorialMap& map, const FaceColoring& coloring,
                                    int m, const std::vector<int>& labels);

/// A balanced map made admissible: subdivided, labeled and checked.
struct Realization {
  CombinatorialMap enriched;
  FaceColoring coloring;
  VertexLabeling labeling;
  std::vector<int> subdivisions;  // by edge of the input map
  bool from_matching = true;      // false when the label search supplied the enrichment
};

/// Matching-based enrichment followed by label propagation. When propagation is
/// obstructed (possible in positive genus) the enrichment is rebuilt from a
/// label search. Throws NoPerfectMatching on maps that are not locally balanced.
Realization realize(const CombinatorialMap& map, const FaceColoring& coloring);

/// Admissible labeling whose corners carry pairwise distinct labels, m = #corners.
/// Throws PreconditionFailed if none exists.
Realization generic_labeling(const CombinatorialMap& map, const FaceColoring& coloring);

}  // namespace pullback
