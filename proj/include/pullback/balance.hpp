#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pullback/surface_map.hpp"

namespace pullback {

/// A connected set of faces whose boundary is a positive cobordant multicycle.
///
/// Every boundary edge has its A face inside, and at every vertex the region
/// boundary uses either no edge or exactly two, so the boundary splits into
/// vertex-disjoint simple cycles.
struct Region {
  std::vector<int> faces;             // sorted face ids
  std::vector<int> boundary_edges;    // sorted edge ids
  std::vector<std::vector<Dart>> boundary_cycles;  // A-side darts in traversal order
  int a_faces = 0;  // faces of the A color (for the coloring it was built with)
  int b_faces = 0;

  friend bool operator==(const Region&, const Region&) = default;
};

enum class StructuralDefect {
  None,
  NotColorable,
  UnequalColorClasses,
  Loop,
  RepeatedCornerIncidence,
};

std::string to_string(StructuralDefect d);

struct BalanceReport {
  int d = 0;
  bool globally_balanced = false;
  bool locally_balanced = false;
  StructuralDefect defect = StructuralDefect::None;
  std::string reason;
  /// First violating region and the coloring it refers to.
  std::optional<Region> violation;
  std::optional<FaceColoring> violation_coloring;
};

struct RegionLimits {
  std::size_t max_regions = 1'000'000;
};

/// Structural checks plus #A == #B for the given coloring.
BalanceReport is_globally_balanced(const CombinatorialMap& map, const FaceColoring& coloring);

/// Same, computing the alternating coloring first (not colorable => not balanced).
BalanceReport is_globally_balanced(const CombinatorialMap& map);

/// Checks the region invariants for an arbitrary face set; nullopt when it is not a
/// positive region.
std::optional<Region> make_region(const CombinatorialMap& map, const FaceColoring& coloring,
                                  const std::vector<int>& faces);

/// Visits every positive region exactly once, grown as connected face sets with
/// pruning. Regions are delivered in increasing order of their sorted face lists.
/// Throws SizeLimitExceeded when more than `limits.max_regions` regions exist.
std::vector<Region> positive_regions(const CombinatorialMap& map, const FaceColoring& coloring,
                                     const RegionLimits& limits = {});

/// Local balance: every positive region holds strictly more A than B faces, for
/// both alternating colorings. Expects a globally balanced map.
BalanceReport is_locally_balanced(const CombinatorialMap& map, const FaceColoring& coloring,
                                  const RegionLimits& limits = {});

/// Global and local balance together.
BalanceReport check_balance(const CombinatorialMap& map, const RegionLimits& limits = {});

/// Single-cycle local balance for planar maps: every simple cycle that keeps A faces
/// on its left encloses strictly more A than B faces, for both colorings.
bool thurston_locally_balanced(const CombinatorialMap& map, const FaceColoring& coloring);

/// #corners <= 2(g + d - 1), with d = F/2.
bool corner_bound_check(const CombinatorialMap& map);

/// Genus 0, every vertex 4-valent and V = 2d - 2.
bool is_generic_thurston(const CombinatorialMap& map);

}  // namespace pullback
