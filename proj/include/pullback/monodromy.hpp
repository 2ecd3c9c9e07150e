#pragma once

#include <string>
#include <vector>

#include "pullback/labeling.hpp"
#include "pullback/surface_map.hpp"

namespace pullback {

/// Monodromy of a degree d covering over m branch points: permutations of the
/// sheets {0..d-1} (printed 1-based), composed left to right.
struct Constellation {
  int d = 0;
  std::vector<Perm> perms;

  friend bool operator==(const Constellation&, const Constellation&) = default;
  friend auto operator<=>(const Constellation&, const Constellation&) = default;
};

/// Sheets are the A faces in face id order. For a vertex labeled j the A faces
/// around it form one cycle of perms[j-1], taken against the rotation.
Constellation constellation_from(const CombinatorialMap& map, const FaceColoring& coloring,
                                 const VertexLabeling& lab);

struct ConstellationReport {
  bool product_identity = false;
  bool transitive = false;
  bool passport_matches = false;
  int genus = 0;
  bool genus_valid = false;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Product, transitivity and cycle types. Fixed points count as parts of size 1
/// unless `ignore_fixed_points`. An empty expected passport skips the comparison.
ConstellationReport verify_constellation(const Constellation& c, const Passport& expected = {},
                                         bool ignore_fixed_points = false);

Passport passport_of(const Constellation& c);

/// 2 - 2g = 2d - sum of (part - 1). Throws NonIntegerGenus.
int rh_genus(const Passport& p);

/// The pullback cell graph: d A faces and d B faces, each with m vertices, and
/// one vertex over label j for every cycle of perms[j]. Throws NotVerified unless
/// the product is the identity, the action is transitive and m >= 2.
LabeledMap pullback_from_constellation(const Constellation& c);

/// Lexicographically least simultaneous conjugate.
Constellation canonical_constellation(const Constellation& c);

bool are_conjugate(const Constellation& a, const Constellation& b);

/// All verified constellations of degree d with m permutations, one per
/// simultaneous conjugacy class, sorted.
std::vector<Constellation> all_constellations(int d, int m);

}  // namespace pullback
