#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pullback/permutation.hpp"

namespace pullback {

using Dart = int;

/// A cell graph on an oriented closed surface, encoded as a rotation system.
///
/// Darts are half-edges 0..dart_count()-1. `alpha` pairs the two darts of an
/// edge and `sigma` is the cyclic successor of a dart around its vertex.
/// Faces are the orbits of phi = sigma o alpha, i.e. phi(x) = sigma(alpha(x)).
/// A face orbit is read as the positive traversal of that face's boundary,
/// with the face on its left.
///
/// Vertices, edges and faces are numbered by their minimal dart, so the ids
/// are a function of the dart numbering alone. Maps are immutable.
class CombinatorialMap {
 public:
  /// Validates and builds a map. Throws Error with kind BadPermutation,
  /// NotInvolution or Disconnected.
  static CombinatorialMap build(Perm alpha, Perm sigma);

  int dart_count() const { return static_cast<int>(alpha_.size()); }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return dart_count() / 2; }
  int face_count() const { return static_cast<int>(faces_.size()); }

  Dart alpha(Dart d) const { return alpha_[d]; }
  Dart sigma(Dart d) const { return sigma_[d]; }
  Dart sigma_inv(Dart d) const { return sigma_inv_[d]; }
  Dart phi(Dart d) const { return sigma_[alpha_[d]]; }

  const Perm& alpha_perm() const { return alpha_; }
  const Perm& sigma_perm() const { return sigma_; }

  int vertex_of(Dart d) const { return vertex_of_[d]; }
  int face_of(Dart d) const { return face_of_[d]; }
  int edge_of(Dart d) const { return edge_of_[d]; }

  /// Dart cycles, each starting at its minimal dart.
  const std::vector<std::vector<Dart>>& vertices() const { return vertices_; }
  const std::vector<std::vector<Dart>>& faces() const { return faces_; }
  /// Edge e is {edges()[e][0], edges()[e][1]} with the smaller dart first.
  const std::vector<std::vector<Dart>>& edges() const { return edges_; }

  int valence(int vertex) const { return static_cast<int>(vertices_[vertex].size()); }
  int face_length(int face) const { return static_cast<int>(faces_[face].size()); }

  int euler_characteristic() const { return vertex_count() - edge_count() + face_count(); }

  /// g = (2 - V + E - F) / 2. Throws NonIntegerGenus on a corrupted map.
  int genus() const;

  /// Edges whose two darts sit on the same vertex.
  std::vector<int> loop_edges() const;
  bool has_loops() const { return !loop_edges().empty(); }

  /// Vertices of valence > 2.
  std::vector<int> corners() const;
  bool is_corner(int vertex) const { return valence(vertex) > 2; }

  friend bool operator==(const CombinatorialMap& a, const CombinatorialMap& b) {
    return a.alpha_ == b.alpha_ && a.sigma_ == b.sigma_;
  }

 private:
  CombinatorialMap() = default;

  Perm alpha_, sigma_, sigma_inv_;
  std::vector<int> vertex_of_, face_of_, edge_of_;
  std::vector<std::vector<Dart>> vertices_, faces_, edges_;
};

enum class Color : std::uint8_t { A, B };

inline Color opposite(Color c) { return c == Color::A ? Color::B : Color::A; }
inline char color_char(Color c) { return c == Color::A ? 'A' : 'B'; }

/// Proper 2-coloring of faces: faces sharing an edge get different colors.
struct FaceColoring {
  std::vector<Color> colors;

  Color operator[](int face) const { return colors[face]; }
  FaceColoring flipped() const;
  int count(Color c) const;

  friend bool operator==(const FaceColoring&, const FaceColoring&) = default;
};

bool is_proper_coloring(const CombinatorialMap& map, const FaceColoring& coloring);

/// The proper coloring in which the face of dart 0 is A. The only other proper
/// coloring is its flip. Throws NotBipartiteFaces when none exists.
FaceColoring alternating_coloring(const CombinatorialMap& map);

/// Dual multigraph: one arc per edge of the map, joining the faces on its two sides.
struct FaceAdjacency {
  struct Arc {
    int edge;
    int face_a;  // face of the smaller dart of the edge
    int face_b;
  };
  int face_count = 0;
  std::vector<Arc> arcs;
};

FaceAdjacency face_adjacency(const CombinatorialMap& map);

struct DegreeProfile {
  std::vector<int> valences;  // by vertex id
  std::vector<int> corners;   // vertex ids with valence > 2
};

DegreeProfile degree_profile(const CombinatorialMap& map);

/// The dart of `face` emanating from `vertex`, if the vertex lies on the face.
/// When the vertex meets the face several times the first one in face order is returned.
std::optional<Dart> dart_of_face_at_vertex(const CombinatorialMap& map, int face, int vertex);

/// Result of canonical relabeling: `relabel[old] = new`.
struct CanonicalForm {
  CombinatorialMap map;
  Perm relabel;
};

/// Breadth-first relabeling from `start`: the start dart becomes 0, and darts are
/// numbered in discovery order visiting alpha then sigma of each labeled dart.
CanonicalForm relabel_from(const CombinatorialMap& map, Dart start);

/// Lexicographically minimal (alpha, sigma) over all breadth-first relabelings.
CanonicalForm canonical_form(const CombinatorialMap& map);

/// Two maps are isomorphic iff a relabeling commuting with sigma and alpha exists.
bool are_isomorphic(const CombinatorialMap& a, const CombinatorialMap& b);

/// Isomorphism that must send the marked dart of `a` to the marked dart of `b`.
bool are_isomorphic_marked(const CombinatorialMap& a, Dart mark_a, const CombinatorialMap& b,
                           Dart mark_b);

/// Applies a dart relabeling to a map.
CombinatorialMap relabeled(const CombinatorialMap& map, std::span<const int> relabel);

}  // namespace pullback
