#pragma once

#include <vector>

#include "pullback/surface_map.hpp"

namespace pullback {

struct CorpusOptions {
  int max_edges = 8;          // all genera up to this many edges
  int max_planar_edges = 12;  // genus 0 only beyond max_edges
  int max_degree = 4;         // at most 2 * max_degree faces
};

/// Globally balanced maps without 2-valent vertices, one per isomorphism class,
/// sorted by canonical form. Every map is stored in canonical numbering.
///
/// A map is generated from two face permutations on the edges: dart 2e lies on
/// the A face of edge e, dart 2e+1 on its B face, sigma(2e+1) = 2P(e) and
/// sigma(2e) = 2Q(e)+1.
std::vector<CombinatorialMap> balanced_corpus(const CorpusOptions& options = {});

}  // namespace pullback
