#pragma once

#include <string>

#include "pullback/document.hpp"

namespace pullback {

/// Undirected multigraph in DOT, one node per vertex and one edge per map edge.
/// Labels and colors of the document are shown when present.
std::string to_dot(const MapDocument& doc);

/// Planar drawing. With a real cycle the points sit on a horizontal axis and the
/// other edges are drawn as half-ellipses above or below it; otherwise vertices
/// are placed on a circle. Throws UnsupportedFormat for positive genus.
std::string to_svg(const MapDocument& doc);

}  // namespace pullback
