#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pullback/labeling.hpp"
#include "pullback/monodromy.hpp"
#include "pullback/real_combinatorics.hpp"
#include "pullback/surface_map.hpp"

namespace pullback {

/// A map with its optional decorations, as stored in map documents.
struct MapDocument {
  CombinatorialMap map;
  std::optional<std::vector<int>> labels;  // by vertex id, values 1..m
  std::optional<FaceColoring> colors;      // by face id
  std::optional<std::vector<Dart>> real_cycle;

  /// Labeling with m = largest label.
  std::optional<VertexLabeling> labeling() const;
};

/// Compact JSON with sorted keys: darts, alpha, sigma and the present decorations.
nlohmann::json to_json(const MapDocument& doc);
std::string serialize(const MapDocument& doc);

/// Throws ParseError on malformed text and InvariantViolation when the content
/// does not describe a valid decorated map.
MapDocument parse_map_document(std::string_view text);
MapDocument map_document_from_json(const nlohmann::json& j);

/// Relabels darts into canonical form and carries the decorations along.
MapDocument canonicalize(const MapDocument& doc);

/// {"d": d, "perms": [[...], ...]} in 1-based one-line notation.
nlohmann::json to_json(const Constellation& c);
std::string serialize(const Constellation& c);
Constellation parse_constellation(std::string_view text);

/// {"a": [...], "arcs": [[i, j], ...], "n": n}; d is recovered from sum(a) = 2d - 2.
nlohmann::json to_json(const NonCrossingPairing& p);
std::string serialize(const NonCrossingPairing& p);
NonCrossingPairing parse_pairing(std::string_view text);

nlohmann::json to_json(const Tableau2Row& t);
std::string serialize(const Tableau2Row& t);

}  // namespace pullback
