#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pullback/surface_map.hpp"

namespace pullback {

/// Weights a_1..a_n on n cyclically ordered points with sum 2d - 2.
struct WeightComposition {
  int d = 0;
  std::vector<int> a;

  int n() const { return static_cast<int>(a.size()); }
  bool valid() const;

  friend bool operator==(const WeightComposition&, const WeightComposition&) = default;
};

/// All compositions of 2d - 2 into at least two parts, each at most d - 1, in
/// lexicographic order.
std::vector<WeightComposition> compositions(int d);

/// Arcs (i, j), 1-based with i < j, sorted; repeated arcs appear repeatedly.
struct NonCrossingPairing {
  WeightComposition type;
  std::vector<std::pair<int, int>> arcs;

  friend bool operator==(const NonCrossingPairing&, const NonCrossingPairing&) = default;
};

bool is_valid_pairing(const NonCrossingPairing& p);

/// Sorted lexicographically by arc list.
std::vector<NonCrossingPairing> enumerate_pairings(const WeightComposition& t);

/// Counts pairings without building them.
std::uint64_t count_pairings(const WeightComposition& t);

/// Two rows of length d - 1 with entries 1..n.
struct Tableau2Row {
  std::vector<int> top, bottom;

  friend bool operator==(const Tableau2Row&, const Tableau2Row&) = default;
  friend auto operator<=>(const Tableau2Row&, const Tableau2Row&) = default;
};

bool is_ssyt(const Tableau2Row& t, const WeightComposition& type);

/// Column-by-column fill, sorted.
std::vector<Tableau2Row> enumerate_ssyt(const WeightComposition& t);

/// Row-occupancy recursion over the values 1..n.
std::uint64_t kostka(const WeightComposition& t);

/// (1/d) binom(2d - 2, d - 1).
boost::multiprecision::cpp_int catalan(int d);

/// Row 1 receives one copy of k per arc leaving k to the right, row 2 one copy per
/// arc arriving at k from the left.
Tableau2Row pairing_to_tableau(const NonCrossingPairing& p);
NonCrossingPairing tableau_to_pairing(const Tableau2Row& t, const WeightComposition& type);

/// Planar map made of the real n-cycle, the arcs in the upper half-plane and their
/// reflections in the lower one. Dart 0 is the real edge leaving point 1.
struct MirrorGraph {
  CombinatorialMap map;
  FaceColoring coloring;
  std::vector<Dart> real_cycle;  // darts leaving points 1..n along the real line
  Perm conjugation;              // the reflection, as a dart permutation
};

MirrorGraph mirror_graph(const NonCrossingPairing& p);

/// All vertices on the real cycle, the real cycle closes up, and a color-swapping
/// reflection fixing the real edges exists; genus 0 required.
bool is_real_balanced(const CombinatorialMap& map, const std::vector<Dart>& real_cycle);

struct CoverageRow {
  WeightComposition type;
  std::uint64_t pairings = 0;
  std::uint64_t tableaux = 0;
  std::uint64_t kostka = 0;
  bool bijection_ok = false;
  bool mirrors_distinct = false;

  bool ok() const {
    return pairings == tableaux && tableaux == kostka && bijection_ok && mirrors_distinct;
  }
};

/// Per composition of 2d - 2: the three counts, bijection round trip and pairwise
/// distinct mirror graphs under isomorphisms fixing the real base dart.
std::vector<CoverageRow> count_coverage_check(int d);

}  // namespace pullback
