#pragma once

#include <fstream>
#include <iterator>
#include <string>

#include "pullback/document.hpp"
#include "pullback/surface_map.hpp"

namespace pullback::testing {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline MapDocument fixture(const std::string& name) {
  return parse_map_document(read_file(std::string(FIXTURE_DIR) + "/" + name + ".json"));
}

inline std::string golden(const std::string& name) {
  return read_file(std::string(GOLDEN_DIR) + "/" + name);
}

// sigma = (0 2 4 6)(7 5 3 1): two 4-valent vertices joined by four edges.
inline CombinatorialMap b2() {
  return CombinatorialMap::build({1, 0, 3, 2, 5, 4, 7, 6}, {2, 7, 4, 1, 6, 3, 0, 5});
}

// Two 2-valent vertices joined by two edges.
inline CombinatorialMap cycle_d1() {
  return CombinatorialMap::build({1, 0, 3, 2}, {2, 3, 0, 1});
}

}  // namespace pullback::testing

#include "pullback/corpus.hpp"

namespace pullback::testing {

// Smaller than the full corpus, still holding non locally balanced maps.
inline const std::vector<CombinatorialMap>& small_corpus() {
  static const auto maps = balanced_corpus({.max_edges = 6, .max_planar_edges = 10, .max_degree = 4});
  return maps;
}

}  // namespace pullback::testing
